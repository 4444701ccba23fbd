#include "halve2/codec.hpp"

#include <string>

#include "halve2/error.hpp"

namespace halve2 {

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing key '") + key + "'");
  return j.at(key);
}

FieldElement element_from_json(const FieldSpec& spec, const Json& j) {
  if (!j.is_string()) malformed("field elements are encoded as strings, got " + j.dump());
  return FieldElement::parse(spec, j.get<std::string>());
}

bool bool_from_json(const Json& j) {
  if (!j.is_boolean()) malformed("expected a boolean, got " + j.dump());
  return j.get<bool>();
}

Json optional_element(const std::optional<FieldElement>& e) {
  return e ? Json(e->to_string()) : Json(nullptr);
}

Json witness_array(const std::array<SquareWitness, 3>& w) {
  Json out = Json::array();
  for (const auto& x : w) out.push_back(to_json(x));
  return out;
}

}  // namespace

Point parse_point_literal(const FieldSpec& spec, std::string_view text) {
  if (text == "inf") return Point::infinity();
  auto parts = split_commas(text);
  if (parts.size() != 2) malformed("point must be 'x,y' or 'inf', got '" + std::string(text) + "'");
  return Point::affine(FieldElement::parse(spec, parts[0]), FieldElement::parse(spec, parts[1]));
}

Curve parse_curve_literal(const FieldSpec& spec, std::string_view roots) {
  auto parts = split_commas(roots);
  if (parts.size() != 3) malformed("expected three comma-separated roots, got '" + std::string(roots) + "'");
  return Curve(spec, FieldElement::parse(spec, parts[0]), FieldElement::parse(spec, parts[1]),
               FieldElement::parse(spec, parts[2]));
}

Json to_json(const Point& p) {
  if (p.is_infinity()) return "inf";
  Json j = Json::object();
  j["x"] = p.x().to_string();
  j["y"] = p.y().to_string();
  return j;
}

Point point_from_json(const FieldSpec& spec, const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Point::infinity();
    malformed("point string must be \"inf\", got " + j.dump());
  }
  return Point::affine(element_from_json(spec, member(j, "x")), element_from_json(spec, member(j, "y")));
}

Json to_json(const Curve& c) {
  Json j = Json::object();
  j["field"] = c.spec().to_string();
  j["roots"] = Json::array();
  for (const auto& r : c.roots()) j["roots"].push_back(r.to_string());
  return j;
}

Curve curve_from_json(const Json& j) {
  const Json& field = member(j, "field");
  if (!field.is_string()) malformed("curve field must be a string");
  FieldSpec spec = FieldSpec::parse(field.get<std::string>());
  const Json& roots = member(j, "roots");
  if (!roots.is_array() || roots.size() != 3) malformed("curve needs exactly three roots");
  return Curve(spec, element_from_json(spec, roots[0]), element_from_json(spec, roots[1]),
               element_from_json(spec, roots[2]));
}

Json to_json(const SquareWitness& w) {
  Json j = Json::object();
  j["index"] = w.index;
  j["difference"] = w.difference.to_string();
  j["is_square"] = w.is_square;
  j["root"] = optional_element(w.root);
  return j;
}

Json to_json(const Divisibility& d) {
  Json j = Json::object();
  j["halvable"] = d.halvable;
  j["witness"] = witness_array(d.witness);
  return j;
}

Json to_json(const HalvingReport& r) {
  Json j = Json::object();
  j["halvable"] = r.halvable;
  j["witness"] = witness_array(r.witness);
  j["halves"] = Json::array();
  for (const auto& h : r.halves) {
    Json entry = Json::object();
    entry["triple"] = Json::array();
    for (const auto& x : h.triple.r) entry["triple"].push_back(x.to_string());
    entry["Q"] = to_json(h.q);
    entry["tangent"] = Json::object();
    entry["tangent"]["l"] = h.tangent.l.to_string();
    entry["tangent"]["m"] = h.tangent.m.to_string();
    j["halves"].push_back(std::move(entry));
  }
  return j;
}

HalvingReport report_from_json(const FieldSpec& spec, const Json& j) {
  const Json& witness = member(j, "witness");
  if (!witness.is_array() || witness.size() != 3) malformed("report witness must list three entries");

  auto read_witness = [&](std::size_t i) {
    const Json& w = witness[i];
    const Json& index = member(w, "index");
    if (!index.is_number_integer()) malformed("witness index must be an integer");
    const Json& root = member(w, "root");
    std::optional<FieldElement> r;
    if (!root.is_null()) r = element_from_json(spec, root);
    return SquareWitness{index.get<int>(), element_from_json(spec, member(w, "difference")),
                         bool_from_json(member(w, "is_square")), std::move(r)};
  };

  HalvingReport report{bool_from_json(member(j, "halvable")),
                       {read_witness(0), read_witness(1), read_witness(2)},
                       {}};

  const Json& halves = member(j, "halves");
  if (!halves.is_array()) malformed("report halves must be an array");
  for (const auto& h : halves) {
    const Json& triple = member(h, "triple");
    if (!triple.is_array() || triple.size() != 3) malformed("root triple needs three entries");
    const Json& tangent = member(h, "tangent");
    report.halves.push_back(Half{
        RootTriple{{element_from_json(spec, triple[0]), element_from_json(spec, triple[1]),
                    element_from_json(spec, triple[2])}},
        point_from_json(spec, member(h, "Q")),
        TangentLine{element_from_json(spec, member(tangent, "l")),
                    element_from_json(spec, member(tangent, "m"))}});
  }
  return report;
}

Json to_json(const HalvingChain& chain) {
  Json j = Json::object();
  j["base"] = to_json(chain.base);
  j["links"] = Json::array();
  for (const auto& q : chain.links) j["links"].push_back(to_json(q));
  j["depth"] = chain.depth();
  return j;
}

Json to_json(const Point& base, const std::vector<Order4Point>& points) {
  Json j = Json::object();
  j["base"] = to_json(base);
  j["points"] = Json::array();
  for (const auto& o : points) {
    Json entry = Json::object();
    entry["Q"] = to_json(o.q);
    entry["doubles_to_base"] = o.doubles_to_base;
    entry["order4"] = o.has_order_four;
    j["points"].push_back(std::move(entry));
  }
  return j;
}

Json preimage_record(const Point& p, const std::vector<Point>& preimages) {
  Json j = Json::object();
  j["point"] = to_json(p);
  j["preimages"] = Json::array();
  for (const auto& q : preimages) j["preimages"].push_back(to_json(q));
  return j;
}

}  // namespace halve2
