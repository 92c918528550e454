#include "fdb/hopf.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "fdb/partitions.hpp"

namespace fdb {

namespace {

Monomial a_power(int index, int exponent)
{
    // a_1 = 1.
    if (index == 1 || exponent == 0)
        return Monomial{};
    return Monomial(Generator::a(index), exponent);
}

TensorElement coproduct_uncached(int n)
{
    TensorElement out;
    for (int k = 1; k <= n; ++k) {
        for (const auto& tv : type_vectors(n, k)) {
            Monomial left;
            for (int i = 2; i <= tv.n(); ++i)
                left = left * a_power(i, tv.count(i));
            out.add_term(left, a_power(k, 1), Rational(fdb_multinomial(tv)));
        }
    }
    return out;
}

} // namespace

TensorElement coproduct(int n)
{
    if (n < 2)
        throw DomainError("coproduct is defined on a_n for n >= 2 (a_1 = 1)");
    static std::mutex mutex;
    static std::map<int, TensorElement> memo;
    std::scoped_lock lock(mutex);
    auto it = memo.find(n);
    if (it == memo.end())
        it = memo.emplace(n, coproduct_uncached(n)).first;
    return it->second;
}

TensorElement coproduct_poly(const Polynomial& p)
{
    if (auto f = p.family(); f && *f != Family::A)
        throw FamilyMismatchError("coproduct_poly acts on the a-family, got " +
                                  std::string(family_name(*f)));
    TensorElement out;
    for (const auto& [m, c] : p.terms()) {
        TensorElement term(Polynomial(1), Polynomial(1));
        for (const auto& [g, e] : m.factors())
            term = term * coproduct(g.index()).pow(e);
        term *= c;
        out += term;
    }
    return out;
}

Rational counit(const Polynomial& p)
{
    return p.constant_term();
}

Polynomial antipode(int n)
{
    if (n < 2)
        throw DomainError("antipode is defined on a_n for n >= 2");
    std::vector<Polynomial> args;
    args.reserve(static_cast<std::size_t>(n));
    args.emplace_back(0); // x_1 = 0
    for (int i = 2; i <= n; ++i)
        args.emplace_back(Generator::a(i));
    Polynomial out;
    for (int k = 1; k <= n - 1; ++k) {
        Polynomial term =
            bell_partial(n - 1 + k, k, std::span<const Polynomial>(args));
        if (k % 2 == 1)
            out -= term;
        else
            out += term;
    }
    return out;
}

namespace {

Polynomial antipode_recursive_monomial(const Monomial& m,
                                       std::map<int, Polynomial>& memo);

Polynomial antipode_recursive_generator(int n, std::map<int, Polynomial>& memo)
{
    auto it = memo.find(n);
    if (it != memo.end())
        return it->second;
    Polynomial s(Monomial(Generator::a(n)), -1);
    for (const auto& [pair, c] : coproduct(n).terms()) {
        if (pair.first.is_unit() || pair.second.is_unit())
            continue;
        s -= c * (antipode_recursive_monomial(pair.first, memo) *
                  Polynomial(pair.second));
    }
    memo.emplace(n, s);
    return s;
}

Polynomial antipode_recursive_monomial(const Monomial& m,
                                       std::map<int, Polynomial>& memo)
{
    Polynomial out(1);
    for (const auto& [g, e] : m.factors())
        out *= antipode_recursive_generator(g.index(), memo).pow(e);
    return out;
}

} // namespace

Polynomial antipode_recursive(int n)
{
    if (n < 2)
        throw DomainError("antipode is defined on a_n for n >= 2");
    std::map<int, Polynomial> memo;
    return antipode_recursive_generator(n, memo);
}

Polynomial antipode_poly(const Polynomial& p)
{
    if (auto f = p.family(); f && *f != Family::A)
        throw FamilyMismatchError("antipode_poly acts on the a-family");
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term(c);
        for (const auto& [g, e] : m.factors())
            term *= antipode(g.index()).pow(e);
        out += term;
    }
    return out;
}

namespace {

using Key3 = std::tuple<Monomial, Monomial, Monomial>;
using Tensor3 = std::map<Key3, Rational>;

void add3(Tensor3& t, Key3 key, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = t.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            t.erase(it);
    }
}

Tensor3 expand_left(const TensorElement& t)
{
    Tensor3 out;
    for (const auto& [pair, c] : t.terms()) {
        TensorElement inner = coproduct_poly(Polynomial(pair.first));
        for (const auto& [ip, ic] : inner.terms())
            add3(out, {ip.first, ip.second, pair.second}, c * ic);
    }
    return out;
}

Tensor3 expand_right(const TensorElement& t)
{
    Tensor3 out;
    for (const auto& [pair, c] : t.terms()) {
        TensorElement inner = coproduct_poly(Polynomial(pair.second));
        for (const auto& [ip, ic] : inner.terms())
            add3(out, {pair.first, ip.first, ip.second}, c * ic);
    }
    return out;
}

} // namespace

CheckReport check_hopf_axioms(int upto)
{
    if (upto < 2)
        throw DomainError("check_hopf_axioms needs upto >= 2");
    for (int n = 2; n <= upto; ++n) {
        TensorElement delta = coproduct(n);
        Polynomial an{Monomial(Generator::a(n)), 1};
        if (expand_left(delta) != expand_right(delta))
            return {false, "coassociativity fails on a_" + std::to_string(n)};
        if (counit_left(delta) != an)
            return {false, "(counit (x) id) Delta != id on a_" + std::to_string(n)};
        if (counit_right(delta) != an)
            return {false, "(id (x) counit) Delta != id on a_" + std::to_string(n)};
        Polynomial left_axiom, right_axiom;
        for (const auto& [pair, c] : delta.terms()) {
            left_axiom +=
                c * (antipode_poly(Polynomial(pair.first)) * Polynomial(pair.second));
            right_axiom +=
                c * (Polynomial(pair.first) * antipode_poly(Polynomial(pair.second)));
        }
        if (!left_axiom.is_zero())
            return {false, "m(S (x) id) Delta != unit*counit on a_" +
                               std::to_string(n) + ": " + left_axiom.to_string()};
        if (!right_axiom.is_zero())
            return {false, "m(id (x) S) Delta != unit*counit on a_" +
                               std::to_string(n) + ": " + right_axiom.to_string()};
    }
    return {true, "hopf axioms hold on a_2..a_" + std::to_string(upto)};
}

Character::Character(int order, std::vector<Rational> generator_values)
    : order_(order), values_(std::move(generator_values))
{
    if (order_ < 1)
        throw DomainError("character order must be >= 1");
    if (static_cast<int>(values_.size()) != order_ - 1)
        throw DomainError("character of order " + std::to_string(order_) +
                          " needs values on a_2..a_" + std::to_string(order_));
}

Character Character::identity(int order)
{
    return Character(order,
                     std::vector<Rational>(static_cast<std::size_t>(order - 1)));
}

Character Character::from_series(const ExpSeries& f)
{
    if (!f.is_unital())
        throw NotUnitalError("characters correspond to series with f_1 = 1");
    std::vector<Rational> values;
    for (int n = 2; n <= f.order(); ++n)
        values.push_back(f.coeff(n));
    return Character(f.order(), std::move(values));
}

ExpSeries Character::to_series() const
{
    std::vector<Rational> coeffs;
    coeffs.emplace_back(1);
    for (int n = 2; n <= order_; ++n)
        coeffs.push_back(on_generator(n));
    return ExpSeries(order_, std::move(coeffs));
}

Rational Character::on_generator(int n) const
{
    if (n < 2 || n > order_)
        throw DomainError("character of order " + std::to_string(order_) +
                          " has no value on a_" + std::to_string(n));
    return values_[static_cast<std::size_t>(n - 2)];
}

Rational Character::operator()(const Monomial& m) const
{
    if (auto f = m.family(); f && *f != Family::A)
        throw FamilyMismatchError("characters act on the a-family");
    Rational out = 1;
    for (const auto& [g, e] : m.factors())
        for (int i = 0; i < e && out != 0; ++i)
            out *= on_generator(g.index());
    return out;
}

Rational Character::operator()(const Polynomial& p) const
{
    Rational out = 0;
    for (const auto& [m, c] : p.terms())
        out += c * (*this)(m);
    return out;
}

Character convolve(const Character& f, const Character& g)
{
    if (f.order() != g.order())
        throw OrderMismatchError("convolution needs equal character orders");
    std::vector<Rational> values;
    for (int n = 2; n <= f.order(); ++n) {
        Rational v = 0;
        for (const auto& [pair, c] : coproduct(n).terms())
            v += c * f(pair.first) * g(pair.second);
        values.push_back(v);
    }
    return Character(f.order(), std::move(values));
}

Character convolution_inverse(const Character& f)
{
    std::vector<Rational> values;
    for (int n = 2; n <= f.order(); ++n)
        values.push_back(f(antipode(n)));
    return Character(f.order(), std::move(values));
}

std::vector<Monomial> a_monomials_of_degree(int degree)
{
    if (degree < 0)
        throw DomainError("degree must be non-negative");
    if (degree == 0)
        return {Monomial{}};
    // Partitions of `degree` into parts p, each part contributing a_{p+1}.
    std::vector<Monomial> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            std::vector<std::pair<Generator, int>> factors;
            for (int p : parts)
                factors.emplace_back(Generator::a(p + 1), 1);
            out.emplace_back(Monomial(std::move(factors)));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, degree, degree);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Polynomial> primitive_space(int degree, int cap)
{
    if (degree < 1)
        throw DomainError("primitive_space needs degree >= 1");
    if (degree > cap)
        throw ResourceLimitError("primitive space solver capped at degree <= " +
                                 std::to_string(cap));
    std::vector<Monomial> basis = a_monomials_of_degree(degree);
    std::size_t cols = basis.size();

    // Row index: monomial pairs occurring in any proper coproduct part.
    std::map<std::pair<Monomial, Monomial>, std::size_t> rows;
    std::vector<std::map<std::size_t, Rational>> columns(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        for (const auto& [pair, c] : coproduct_poly(Polynomial(basis[j])).terms()) {
            if (pair.first.is_unit() || pair.second.is_unit())
                continue;
            auto [it, ignored] = rows.emplace(pair, rows.size());
            columns[j][it->second] = c;
        }
    }
    std::vector<std::vector<Rational>> matrix(
        rows.size(), std::vector<Rational>(cols, Rational(0)));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [r, c] : columns[j])
            matrix[r][j] = c;

    // Exact Gauss-Jordan; kernel basis from the free columns.
    std::size_t pivot_row = 0;
    std::vector<std::ptrdiff_t> pivot_of_col(cols, -1);
    for (std::size_t col = 0; col < cols && pivot_row < matrix.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < matrix.size() && matrix[sel][col] == 0)
            ++sel;
        if (sel == matrix.size())
            continue;
        std::swap(matrix[sel], matrix[pivot_row]);
        Rational inv = Rational(1) / matrix[pivot_row][col];
        for (auto& v : matrix[pivot_row])
            v *= inv;
        for (std::size_t r = 0; r < matrix.size(); ++r) {
            if (r == pivot_row || matrix[r][col] == 0)
                continue;
            Rational factor = matrix[r][col];
            for (std::size_t j = col; j < cols; ++j)
                matrix[r][j] -= factor * matrix[pivot_row][j];
        }
        pivot_of_col[col] = static_cast<std::ptrdiff_t>(pivot_row);
        ++pivot_row;
    }

    std::vector<Polynomial> out;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] != -1)
            continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = 1;
        for (std::size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] != -1)
                v[col] = -matrix[static_cast<std::size_t>(pivot_of_col[col])][free_col];
        // Scale so the first monomial in canonical order has coefficient 1.
        Rational lead = 0;
        for (std::size_t j = 0; j < cols && lead == 0; ++j)
            lead = v[j];
        Polynomial p;
        for (std::size_t j = 0; j < cols; ++j)
            p += Polynomial(basis[j], v[j] / lead);
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace fdb
