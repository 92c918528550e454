#pragma once

#include <nlohmann/json_fwd.hpp>

#include "fdb/colour.hpp"
#include "fdb/exact.hpp"
#include "fdb/partitions.hpp"
#include "fdb/poly.hpp"
#include "fdb/series.hpp"
#include "fdb/words.hpp"

// JSON interchange. Rationals travel as strings "p/q" (plain "p" when
// q = 1) so nothing is lost; map iteration keeps the output byte-stable.
namespace fdb::json_io {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& where);

json to_json(const TypeVector& tv);

// [[family, index, exponent], ...]; pi generators use [colour, counts]
// as their index.
json to_json(const Monomial& m);
Monomial monomial_from_json(const json& j, const std::string& where);

// [{"coeff": "p/q", "mono": [...]}, ...]
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j, const std::string& where);

// [{"left": mono, "right": mono, "coeff": "p/q"}, ...]
json to_json(const TensorElement& t);

// {"order": N, "coeffs": ["p/q", ...]} with coeffs f_1..f_N.
json to_json(const ExpSeries& s);
ExpSeries series_from_json(const json& j);

// List of blocks, each a sorted integer array.
json to_json(const SetPartition& p);

// [{"word": [n_1..n_r], "coeff": "p/q"}, ...]
json to_json(const WordElement& e);

// [{"monomial": [m_1..m_r], "value": "p/q"}, ...]
json to_json(const DualFunctional& f);

// {"N": vars, "M": cutoff, "coeffs":
//   [{"component": r, "index": [n_1..n_N], "value": "p/q"}, ...]}
json to_json(const NSeries& s);
NSeries nseries_from_json(const json& j);

} // namespace fdb::json_io
