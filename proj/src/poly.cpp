#include "fdb/poly.hpp"

#include <algorithm>
#include <sstream>

namespace fdb {

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::A: return "a";
    case Family::Delta: return "delta";
    case Family::X: return "x";
    case Family::Pi: return "pi";
    }
    return "?";
}

Family family_from_name(std::string_view name)
{
    if (name == "a") return Family::A;
    if (name == "delta") return Family::Delta;
    if (name == "x") return Family::X;
    if (name == "pi") return Family::Pi;
    throw ParseError("unknown generator family \"" + std::string(name) + "\"");
}

int PiIndex::weight() const
{
    int w = 0;
    for (int c : counts)
        w += c;
    return w;
}

Generator::Generator(Family f, int index, PiIndex pi)
    : family_(f), index_(index), pi_(std::move(pi))
{
}

Generator Generator::a(int n)
{
    if (n < 2)
        throw DomainError("a_" + std::to_string(n) +
                          " is not a generator (a_1 is the unit)");
    return Generator(Family::A, n, {});
}

Generator Generator::delta(int n)
{
    if (n < 1)
        throw DomainError("delta_" + std::to_string(n) + " is not a generator");
    return Generator(Family::Delta, n, {});
}

Generator Generator::x(int n)
{
    if (n < 1)
        throw DomainError("x_" + std::to_string(n) + " is not a generator");
    return Generator(Family::X, n, {});
}

Generator Generator::pi(int colour, std::vector<int> counts)
{
    PiIndex pi{colour, std::move(counts)};
    if (colour < 1 || colour > static_cast<int>(pi.counts.size()))
        throw DomainError("pi generator colour out of range");
    for (int c : pi.counts)
        if (c < 0)
            throw DomainError("pi generator counts must be non-negative");
    if (pi.weight() < 2)
        throw DomainError("pi generators of weight < 2 are constants, not generators");
    return Generator(Family::Pi, 0, std::move(pi));
}

int Generator::index() const
{
    if (family_ == Family::Pi)
        throw DomainError("pi generators are indexed by (colour, counts)");
    return index_;
}

const PiIndex& Generator::pi_index() const
{
    if (family_ != Family::Pi)
        throw DomainError("generator has a plain integer index");
    return pi_;
}

int Generator::degree() const
{
    switch (family_) {
    case Family::A: return index_ - 1;
    case Family::Delta:
    case Family::X: return index_;
    case Family::Pi: return pi_.weight() - 1;
    }
    return 0;
}

std::string Generator::to_string() const
{
    switch (family_) {
    case Family::A: return "a_" + std::to_string(index_);
    case Family::Delta: return "d_" + std::to_string(index_);
    case Family::X: return "x_" + std::to_string(index_);
    case Family::Pi: {
        std::string out = "Pi^" + std::to_string(pi_.colour) + "_[";
        for (std::size_t i = 0; i < pi_.counts.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(pi_.counts[i]);
        }
        return out + "]";
    }
    }
    return "?";
}

std::strong_ordering operator<=>(const Generator& lhs, const Generator& rhs)
{
    if (auto c = lhs.family_ <=> rhs.family_; c != 0)
        return c;
    if (lhs.family_ == Family::Pi)
        return lhs.pi_ <=> rhs.pi_;
    return lhs.index_ <=> rhs.index_;
}

Monomial::Monomial(const Generator& g, int exponent)
{
    if (exponent < 0)
        throw DomainError("monomial exponents must be non-negative");
    if (exponent > 0)
        factors_.emplace_back(g, exponent);
}

Monomial::Monomial(std::vector<std::pair<Generator, int>> factors)
    : factors_(std::move(factors))
{
    normalize();
}

void Monomial::normalize()
{
    std::sort(factors_.begin(), factors_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Generator, int>> merged;
    for (auto& [g, e] : factors_) {
        if (e < 0)
            throw DomainError("monomial exponents must be non-negative");
        if (e == 0)
            continue;
        if (!merged.empty() && merged.back().first == g)
            merged.back().second += e;
        else
            merged.emplace_back(g, e);
    }
    factors_ = std::move(merged);
    for (std::size_t i = 1; i < factors_.size(); ++i)
        if (factors_[i].first.family() != factors_[0].first.family())
            throw FamilyMismatchError("monomial mixes families " +
                                      std::string(family_name(factors_[0].first.family())) +
                                      " and " +
                                      std::string(family_name(factors_[i].first.family())));
}

std::optional<Family> Monomial::family() const
{
    if (factors_.empty())
        return std::nullopt;
    return factors_[0].first.family();
}

int Monomial::degree() const
{
    int d = 0;
    for (const auto& [g, e] : factors_)
        d += g.degree() * e;
    return d;
}

int Monomial::total_exponent() const
{
    int t = 0;
    for (const auto& [g, e] : factors_)
        t += e;
    return t;
}

Monomial Monomial::operator*(const Monomial& rhs) const
{
    std::vector<std::pair<Generator, int>> factors = factors_;
    factors.insert(factors.end(), rhs.factors_.begin(), rhs.factors_.end());
    return Monomial(std::move(factors));
}

std::string Monomial::to_string() const
{
    if (factors_.empty())
        return "1";
    std::string out;
    for (const auto& [g, e] : factors_) {
        if (!out.empty())
            out += "*";
        out += g.to_string();
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs)
{
    if (auto c = lhs.degree() <=> rhs.degree(); c != 0)
        return c;
    auto fl = lhs.family();
    auto fr = rhs.family();
    if (fl.has_value() != fr.has_value())
        return fl.has_value() ? std::strong_ordering::greater
                              : std::strong_ordering::less;
    if (fl && fr && *fl != *fr)
        return *fl <=> *fr;

    // Walk both exponent-expanded generator sequences from the largest
    // generator down; the lexicographically larger sequence sorts first.
    auto li = lhs.factors().rbegin(), le = lhs.factors().rend();
    auto ri = rhs.factors().rbegin(), re = rhs.factors().rend();
    int lc = li != le ? li->second : 0;
    int rc = ri != re ? ri->second : 0;
    while (li != le && ri != re) {
        if (auto c = ri->first <=> li->first; c != 0)
            return c;
        int step = std::min(lc, rc);
        lc -= step;
        rc -= step;
        if (lc == 0 && ++li != le)
            lc = li->second;
        if (rc == 0 && ++ri != re)
            rc = ri->second;
    }
    if (li == le && ri == re)
        return std::strong_ordering::equal;
    return li == le ? std::strong_ordering::less : std::strong_ordering::greater;
}

Polynomial::Polynomial(int constant) : Polynomial(Rational(constant)) {}

Polynomial::Polynomial(const Int& constant) : Polynomial(Rational(constant)) {}

Polynomial::Polynomial(const Rational& constant)
{
    if (constant != 0)
        terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Generator& g) : Polynomial(Monomial(g)) {}

Polynomial::Polynomial(const Monomial& m, const Rational& coeff)
{
    if (coeff != 0)
        terms_.emplace(m, coeff);
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::optional<Family> Polynomial::family() const
{
    for (const auto& [m, c] : terms_)
        if (!m.is_unit())
            return m.family();
    return std::nullopt;
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const
{
    return coefficient(Monomial{});
}

int Polynomial::degree() const
{
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    if (!m.is_unit()) {
        if (auto f = family(); f && *f != *m.family())
            throw FamilyMismatchError("cannot mix families " +
                                      std::string(family_name(*f)) + " and " +
                                      std::string(family_name(*m.family())) +
                                      " in one polynomial");
    }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
    Polynomial result;
    for (const auto& [ml, cl] : terms_)
        for (const auto& [mr, cr] : rhs.terms_)
            result.add_term(ml * mr, cl * cr);
    terms_ = std::move(result.terms_);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

Polynomial Polynomial::pow(int e) const
{
    if (e < 0)
        throw DomainError("negative polynomial power");
    Polynomial result(1);
    for (int i = 0; i < e; ++i)
        result *= *this;
    return result;
}

Polynomial Polynomial::substitute(const std::map<Generator, Polynomial>& images) const
{
    Polynomial result;
    for (const auto& [m, c] : terms_) {
        Polynomial term(c);
        for (const auto& [g, e] : m.factors()) {
            auto it = images.find(g);
            if (it == images.end())
                throw DomainError("no substitution image for generator " +
                                  g.to_string());
            term *= it->second.pow(e);
        }
        result += term;
    }
    return result;
}

Polynomial Polynomial::homogeneous_component(int d) const
{
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (m.degree() == d)
            out.add_term(m, c);
    return out;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        Rational abs = c < 0 ? Rational(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (m.is_unit())
            out += fdb::to_string(abs);
        else if (abs == 1)
            out += m.to_string();
        else
            out += fdb::to_string(abs) + "*" + m.to_string();
    }
    return out;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs)
{
    lhs += rhs;
    return lhs;
}

Polynomial operator-(Polynomial lhs, const Polynomial& rhs)
{
    lhs -= rhs;
    return lhs;
}

Polynomial operator*(Polynomial lhs, const Polynomial& rhs)
{
    lhs *= rhs;
    return lhs;
}

Polynomial operator*(const Rational& c, Polynomial p)
{
    p *= c;
    return p;
}

Polynomial operator*(Polynomial p, const Rational& c)
{
    p *= c;
    return p;
}

TensorElement::TensorElement(const Polynomial& left, const Polynomial& right)
{
    for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms())
            add_term(ml, mr, cl * cr);
}

Rational TensorElement::coefficient(const Monomial& left, const Monomial& right) const
{
    auto it = terms_.find({left, right});
    return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add_term(const Monomial& left, const Monomial& right,
                             const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(std::make_pair(left, right), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs)
{
    for (const auto& [p, c] : rhs.terms_)
        add_term(p.first, p.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs)
{
    for (const auto& [p, c] : rhs.terms_)
        add_term(p.first, p.second, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, coeff] : terms_)
        coeff *= c;
    return *this;
}

TensorElement TensorElement::operator*(const TensorElement& rhs) const
{
    TensorElement result;
    for (const auto& [pl, cl] : terms_)
        for (const auto& [pr, cr] : rhs.terms_)
            result.add_term(pl.first * pr.first, pl.second * pr.second, cl * cr);
    return result;
}

TensorElement TensorElement::pow(int e) const
{
    if (e < 0)
        throw DomainError("negative tensor power");
    TensorElement result(Polynomial(1), Polynomial(1));
    for (int i = 0; i < e; ++i)
        result = result * *this;
    return result;
}

TensorElement TensorElement::bidegree_component(int left_degree, int right_degree) const
{
    TensorElement out;
    for (const auto& [p, c] : terms_)
        if (p.first.degree() == left_degree && p.second.degree() == right_degree)
            out.add_term(p.first, p.second, c);
    return out;
}

TensorElement TensorElement::map_legs(
    const std::function<Polynomial(const Monomial&)>& left,
    const std::function<Polynomial(const Monomial&)>& right) const
{
    TensorElement out;
    for (const auto& [p, c] : terms_) {
        TensorElement piece(left(p.first), right(p.second));
        piece *= c;
        out += piece;
    }
    return out;
}

std::string TensorElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
        Rational abs = c < 0 ? Rational(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (abs != 1)
            out += fdb::to_string(abs) + "*";
        out += p.first.to_string() + " (x) " + p.second.to_string();
    }
    return out;
}

TensorElement operator+(TensorElement lhs, const TensorElement& rhs)
{
    lhs += rhs;
    return lhs;
}

TensorElement operator-(TensorElement lhs, const TensorElement& rhs)
{
    lhs -= rhs;
    return lhs;
}

TensorElement operator*(const Rational& c, TensorElement t)
{
    t *= c;
    return t;
}

Polynomial contract_multiply(const TensorElement& t)
{
    Polynomial out;
    for (const auto& [p, c] : t.terms())
        out += c * (Polynomial(p.first) * Polynomial(p.second));
    return out;
}

Polynomial counit_left(const TensorElement& t)
{
    Polynomial out;
    for (const auto& [p, c] : t.terms())
        if (p.first.is_unit())
            out += Polynomial(p.second, c);
    return out;
}

Polynomial counit_right(const TensorElement& t)
{
    Polynomial out;
    for (const auto& [p, c] : t.terms())
        if (p.second.is_unit())
            out += Polynomial(p.first, c);
    return out;
}

} // namespace fdb
