#include "fdb/json_io.hpp"

#include <nlohmann/json.hpp>

namespace fdb::json_io {

namespace {

const json& require(const json& j, const char* field, const std::string& where)
{
    if (!j.is_object() || !j.contains(field))
        throw ParseError(where + ": missing field \"" + field + "\"");
    return j.at(field);
}

int int_from_json(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        throw ParseError(where + ": expected an integer");
    return j.get<int>();
}

std::vector<int> int_vector_from_json(const json& j, const std::string& where)
{
    if (!j.is_array())
        throw ParseError(where + ": expected an integer array");
    std::vector<int> out;
    for (const auto& e : j)
        out.push_back(int_from_json(e, where));
    return out;
}

} // namespace

json to_json(const Rational& r)
{
    return fdb::to_string(r);
}

Rational rational_from_json(const json& j, const std::string& where)
{
    if (!j.is_string())
        throw ParseError(where + ": rationals are strings \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

json to_json(const TypeVector& tv)
{
    return json(tv.counts());
}

json to_json(const Monomial& m)
{
    json out = json::array();
    for (const auto& [g, e] : m.factors()) {
        json index;
        if (g.family() == Family::Pi)
            index = json::array({g.pi_index().colour, json(g.pi_index().counts)});
        else
            index = g.index();
        out.push_back(json::array(
            {std::string(family_name(g.family())), std::move(index), e}));
    }
    return out;
}

Monomial monomial_from_json(const json& j, const std::string& where)
{
    if (!j.is_array())
        throw ParseError(where + ": field \"mono\" must be an array of "
                                 "[family, index, exponent] triples");
    std::vector<std::pair<Generator, int>> factors;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 3)
            throw ParseError(where + ": field \"mono\" entries are "
                                     "[family, index, exponent] triples");
        if (!entry[0].is_string())
            throw ParseError(where + ": field \"family\" must be a string");
        Family family = family_from_name(entry[0].get<std::string>());
        int exponent = int_from_json(entry[2], where + ": field \"exponent\"");
        if (family == Family::Pi) {
            if (!entry[1].is_array() || entry[1].size() != 2)
                throw ParseError(where + ": pi index is [colour, counts]");
            int colour = int_from_json(entry[1][0], where + ": field \"colour\"");
            auto counts =
                int_vector_from_json(entry[1][1], where + ": field \"counts\"");
            factors.emplace_back(Generator::pi(colour, std::move(counts)), exponent);
        } else {
            int index = int_from_json(entry[1], where + ": field \"index\"");
            Generator g = family == Family::A       ? Generator::a(index)
                          : family == Family::Delta ? Generator::delta(index)
                                                    : Generator::x(index);
            factors.emplace_back(g, exponent);
        }
    }
    return Monomial(std::move(factors));
}

json to_json(const Polynomial& p)
{
    json out = json::array();
    for (const auto& [m, c] : p.terms())
        out.push_back({{"coeff", to_json(c)}, {"mono", to_json(m)}});
    return out;
}

Polynomial polynomial_from_json(const json& j, const std::string& where)
{
    if (!j.is_array())
        throw ParseError(where + ": polynomials are arrays of terms");
    Polynomial out;
    for (const auto& term : j) {
        Rational coeff =
            rational_from_json(require(term, "coeff", where), where + ".coeff");
        Monomial mono =
            monomial_from_json(require(term, "mono", where), where + ".mono");
        out += Polynomial(mono, coeff);
    }
    return out;
}

json to_json(const TensorElement& t)
{
    json out = json::array();
    for (const auto& [legs, c] : t.terms())
        out.push_back({{"left", to_json(legs.first)},
                       {"right", to_json(legs.second)},
                       {"coeff", to_json(c)}});
    return out;
}

json to_json(const ExpSeries& s)
{
    json coeffs = json::array();
    for (int n = 1; n <= s.order(); ++n)
        coeffs.push_back(to_json(s.coeff(n)));
    return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

ExpSeries series_from_json(const json& j)
{
    const std::string where = "series";
    int order = int_from_json(require(j, "order", where), where + ".order");
    const json& coeffs = require(j, "coeffs", where);
    if (!coeffs.is_array())
        throw ParseError("series.coeffs: expected an array of rationals");
    std::vector<Rational> values;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        values.push_back(rational_from_json(
            coeffs[i], "series.coeffs[" + std::to_string(i) + "]"));
    if (order < 1 || static_cast<int>(values.size()) != order)
        throw ParseError("series.coeffs: expected exactly \"order\" = " +
                         std::to_string(order) + " coefficients f_1..f_N");
    return ExpSeries(order, std::move(values));
}

json to_json(const SetPartition& p)
{
    json out = json::array();
    for (const auto& block : p.blocks())
        out.push_back(json(block));
    return out;
}

json to_json(const WordElement& e)
{
    json out = json::array();
    for (const auto& [w, c] : e.terms())
        out.push_back({{"word", json(w)}, {"coeff", to_json(c)}});
    return out;
}

json to_json(const DualFunctional& f)
{
    json out = json::array();
    for (const auto& [key, value] : f.terms())
        out.push_back({{"monomial", json(key)}, {"value", to_json(value)}});
    return out;
}

json to_json(const NSeries& s)
{
    json coeffs = json::array();
    for (const auto& [key, value] : s.stored_coeffs())
        coeffs.push_back({{"component", key.first},
                          {"index", json(key.second)},
                          {"value", to_json(value)}});
    return {{"N", s.vars()}, {"M", s.cutoff()}, {"coeffs", std::move(coeffs)}};
}

NSeries nseries_from_json(const json& j)
{
    const std::string where = "nseries";
    int vars = int_from_json(require(j, "N", where), where + ".N");
    int cutoff = int_from_json(require(j, "M", where), where + ".M");
    const json& coeffs = require(j, "coeffs", where);
    if (!coeffs.is_array())
        throw ParseError("nseries.coeffs: expected an array");
    NSeries::CoeffMap map;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const std::string entry = "nseries.coeffs[" + std::to_string(i) + "]";
        const json& term = coeffs[i];
        int component =
            int_from_json(require(term, "component", entry), entry + ".component");
        auto index =
            int_vector_from_json(require(term, "index", entry), entry + ".index");
        Rational value =
            rational_from_json(require(term, "value", entry), entry + ".value");
        map[{component, std::move(index)}] = value;
    }
    try {
        return NSeries(vars, cutoff, std::move(map));
    } catch (const DomainError& e) {
        throw ParseError("nseries: " + std::string(e.what()));
    }
}

} // namespace fdb::json_io
