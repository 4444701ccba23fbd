#pragma once

#include <string_view>
#include <vector>

#include "json.hpp"

#include "halve2/curve.hpp"
#include "halve2/halving.hpp"
#include "halve2/tower.hpp"

namespace halve2 {

// Insertion-ordered so that output key order is fixed by the encoders.
using Json = nlohmann::ordered_json;

// Command-line literals. Points are "x,y" or "inf"; roots are "a1,a2,a3".
Point parse_point_literal(const FieldSpec& spec, std::string_view text);
Curve parse_curve_literal(const FieldSpec& spec, std::string_view roots);

Json to_json(const Point& p);
Point point_from_json(const FieldSpec& spec, const Json& j);

Json to_json(const Curve& c);
Curve curve_from_json(const Json& j);

Json to_json(const SquareWitness& w);
Json to_json(const Divisibility& d);

Json to_json(const HalvingReport& r);
/// Throws Parse on any structural problem; does not check the mathematics.
HalvingReport report_from_json(const FieldSpec& spec, const Json& j);

Json to_json(const HalvingChain& chain);
Json to_json(const Point& base, const std::vector<Order4Point>& points);

/// One oracle record: {"point": ..., "preimages": [...]}.
Json preimage_record(const Point& p, const std::vector<Point>& preimages);

}  // namespace halve2
