#include "halve2/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "halve2/codec.hpp"
#include "halve2/error.hpp"
#include "halve2/halving.hpp"
#include "halve2/oracle.hpp"
#include "halve2/tower.hpp"

namespace halve2::cli {

namespace {

enum class Format { Json, Text };

struct Options {
  std::string field;
  std::string roots;
  std::string point;
  int max_depth = 0;
  int index = 0;
  Format format = Format::Json;
};

unsigned long prime_bound() {
  const char* env = std::getenv("HALVE2_PRIME_BOUND");
  if (env == nullptr) return kDefaultPrimeBound;
  std::string text(env);
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw Error(ErrorKind::Parse, "HALVE2_PRIME_BOUND must be a positive integer, got '" + text + "'");
  return std::stoul(text);
}

std::string witness_line(const SquareWitness& w) {
  std::string s = "  x - a" + std::to_string(w.index) + " = " + w.difference.to_string();
  if (w.is_square) return s + "  square, root " + w.root->to_string();
  return s + "  not a square";
}

std::string tangent_text(const TangentLine& t) {
  return "y = " + t.l.to_string() + "*x + " + t.m.to_string();
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_divisible(const Options& o, std::ostream& out) {
  const FieldSpec k = FieldSpec::parse(o.field);
  const Curve c = parse_curve_literal(k, o.roots);
  const Point p = parse_point_literal(k, o.point);
  const Divisibility d = is_halvable(c, p);
  if (o.format == Format::Json) {
    emit(out, to_json(d));
  } else {
    out << "point " << p.to_string() << " on " << c.to_string() << '\n';
    out << (d.halvable ? "divisible by 2" : "not divisible by 2") << '\n';
    for (const auto& w : d.witness) out << witness_line(w) << '\n';
  }
  return kExitOk;
}

int cmd_halve(const Options& o, std::ostream& out) {
  const FieldSpec k = FieldSpec::parse(o.field);
  const Curve c = parse_curve_literal(k, o.roots);
  const Point p = parse_point_literal(k, o.point);
  if (p.is_infinity()) {
    // The formulas need P != inf; the halves of inf are the 2-torsion points.
    const auto pts = halves_of_infinity(c);
    if (o.format == Format::Json) {
      Json j = Json::array();
      for (const auto& q : pts) j.push_back(to_json(q));
      emit(out, j);
    } else {
      for (const auto& q : pts) out << q.to_string() << '\n';
    }
    return kExitOk;
  }
  const HalvingReport r = halves(c, p);
  if (o.format == Format::Json) {
    emit(out, to_json(r));
    return kExitOk;
  }
  out << "point " << p.to_string() << " on " << c.to_string() << '\n';
  out << (r.halvable ? "divisible by 2" : "not divisible by 2") << '\n';
  for (const auto& w : r.witness) out << witness_line(w) << '\n';
  for (std::size_t i = 0; i < r.halves.size(); ++i) {
    const Half& h = r.halves[i];
    out << "half " << i + 1 << ": Q = " << h.q.to_string() << "  roots (" << h.triple.r[0].to_string()
        << ", " << h.triple.r[1].to_string() << ", " << h.triple.r[2].to_string() << ")  tangent "
        << tangent_text(h.tangent) << '\n';
  }
  return kExitOk;
}

int cmd_tower(const Options& o, std::ostream& out) {
  const FieldSpec k = FieldSpec::parse(o.field);
  const Curve c = parse_curve_literal(k, o.roots);
  const Point p = parse_point_literal(k, o.point);
  const HalvingChain chain = two_adic_depth(c, p, o.max_depth);
  if (o.format == Format::Json) {
    emit(out, to_json(chain));
  } else {
    out << "depth " << chain.depth() << " (searched up to " << o.max_depth << ")\n";
    out << "  " << chain.base.to_string() << '\n';
    for (const auto& q : chain.links) out << "  <- " << q.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_order4(const Options& o, std::ostream& out) {
  const FieldSpec k = FieldSpec::parse(o.field);
  const Curve c = parse_curve_literal(k, o.roots);
  const auto pts = order4_points(c, o.index);
  const Point base = two_torsion(c)[static_cast<std::size_t>(o.index)];
  for (const auto& q : pts)
    if (!q.doubles_to_base || !q.has_order_four)
      throw Error(ErrorKind::InvariantBreach, q.q.to_string() + " is not of order 4 over " + base.to_string());
  if (o.format == Format::Json) {
    emit(out, to_json(base, pts));
  } else {
    out << "points of order 4 over " << base.to_string() << '\n';
    for (const auto& q : pts) out << "  " << q.q.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const FieldSpec k = FieldSpec::parse(o.field);
  const Curve c = parse_curve_literal(k, o.roots);
  const PointTable table = build_preimage_table(c, prime_bound());
  for (std::size_t i = 0; i < table.points.size(); ++i) {
    if (o.format == Format::Json) {
      emit(out, preimage_record(table.points[i], table.preimages[i]));
    } else {
      out << table.points[i].to_string() << " <-";
      for (const auto& q : table.preimages[i]) out << ' ' << q.to_string();
      out << '\n';
    }
  }
  return kExitOk;
}

struct Check {
  std::string name;
  bool pass;
};

std::vector<Check> audit(const Curve& c, const Point& p, const HalvingReport& r) {
  std::vector<Check> checks;
  const Divisibility d = is_halvable(c, p);
  checks.push_back({"decision", r.halvable == d.halvable});

  for (std::size_t i = 0; i < 3; ++i) {
    const SquareWitness& w = r.witness[i];
    bool ok = w.index == static_cast<int>(i + 1) && w.difference == d.witness[i].difference &&
              w.is_square == d.witness[i].is_square && w.root.has_value() == w.is_square &&
              (!w.root || w.root->square() == w.difference);
    checks.push_back({"witness[" + std::to_string(i + 1) + "]", ok});
  }

  bool count_ok = r.halves.size() == (d.halvable ? 4u : 0u);
  for (std::size_t a = 0; a < r.halves.size(); ++a)
    for (std::size_t b = a + 1; b < r.halves.size(); ++b)
      if (r.halves[a].q == r.halves[b].q) count_ok = false;
  checks.push_back({"four_distinct_halves", count_ok});

  for (std::size_t i = 0; i < r.halves.size(); ++i) {
    const Half& h = r.halves[i];
    const std::string tag = "half[" + std::to_string(i + 1) + "].";
    const bool affine = !h.q.is_infinity();
    const bool on = on_curve(c, h.q);
    checks.push_back({tag + "root_triple", is_valid_triple(c, p, h.triple)});
    checks.push_back({tag + "on_curve", on});
    checks.push_back({tag + "doubles_to_point", on && double_point(c, h.q) == p});
    checks.push_back({tag + "tangent_through_half", affine && h.q.y() == h.tangent.l * h.q.x() + h.tangent.m});
    checks.push_back({tag + "cubic_identity", affine && verify_cubic_identity(c, h.tangent, h.q.x(), p.x())});
    bool moebius = false;
    if (affine) {
      try {
        moebius = moebius_check(c, p, h.triple, h.tangent, h.q.x());
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateDenominator) throw;
      }
    }
    checks.push_back({tag + "moebius", moebius});
    checks.push_back({tag + "vieta", affine && vieta_check(p, h.triple, h.tangent, h.q.x())});
  }
  return checks;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const FieldSpec k = FieldSpec::parse(o.field);
  const Curve c = parse_curve_literal(k, o.roots);
  const Point p = parse_point_literal(k, o.point);
  if (p.is_infinity()) throw Error(ErrorKind::InfinityInput, "reports describe halves of an affine point");
  if (!on_curve(c, p)) throw Error(ErrorKind::NotOnCurve, p.to_string() + " is not on " + c.to_string());

  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::Parse, "standard input is not valid JSON");
  const HalvingReport r = report_from_json(k, j);

  const auto checks = audit(c, p, r);
  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& ch) { return ch.pass; });
  if (o.format == Format::Json) {
    Json res = Json::object();
    res["checks"] = Json::array();
    for (const auto& ch : checks) {
      Json e = Json::object();
      e["name"] = ch.name;
      e["pass"] = ch.pass;
      res["checks"].push_back(std::move(e));
    }
    res["all_pass"] = all;
    emit(out, res);
  } else {
    for (const auto& ch : checks) out << (ch.pass ? "PASS " : "FAIL ") << ch.name << '\n';
    out << (all ? "all checks passed" : "verification failed") << '\n';
  }
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact halving of points on y^2 = (x - a1)(x - a2)(x - a3)", "halve2"};
  app.require_subcommand(1);

  Options o;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"text", Format::Text}};

  auto add_curve = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "Q or Fp:<prime>")->required();
    sub->add_option("--roots", o.roots, "a1,a2,a3")->required();
    sub->add_option("--format", o.format, "json or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_point = [&](CLI::App* sub) {
    sub->add_option("--point", o.point, "x,y or inf")->required();
  };

  auto* divisible = app.add_subcommand("divisible", "decide whether a point is divisible by 2");
  add_curve(divisible);
  add_point(divisible);
  auto* halve = app.add_subcommand("halve", "all four halves with tangent data");
  add_curve(halve);
  add_point(halve);
  auto* tower = app.add_subcommand("tower", "longest halving chain up to a depth");
  add_curve(tower);
  add_point(tower);
  tower->add_option("--max-depth", o.max_depth, "search depth")->required()->check(CLI::PositiveNumber);
  auto* order4 = app.add_subcommand("order4", "points of order 4 over a 2-torsion point");
  add_curve(order4);
  order4->add_option("--index", o.index, "root index j")->required()->check(CLI::Range(1, 3));
  auto* oracle = app.add_subcommand("oracle", "brute-force doubling preimage table over F_p");
  add_curve(oracle);
  auto* verify = app.add_subcommand("verify", "audit a halving report read from standard input");
  add_curve(verify);
  add_point(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (divisible->parsed()) return cmd_divisible(o, out);
    if (halve->parsed()) return cmd_halve(o, out);
    if (tower->parsed()) return cmd_tower(o, out);
    if (order4->parsed()) return cmd_order4(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (verify->parsed()) return cmd_verify(o, in, out);
  } catch (const RootsNotSquareError& e) {
    err << "error: " << e.what() << '\n';
    for (const auto& w : e.witness()) err << witness_line(w) << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvariantBreach ? kExitInternal : kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace halve2::cli
