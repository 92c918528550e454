#pragma once

#include <string>
#include <vector>

#include "fdb/poly.hpp"
#include "fdb/series.hpp"

namespace fdb {

struct CheckReport {
    bool ok = true;
    std::string detail;
};

// Coproduct of the coordinate a_n (n >= 2):
// Delta a_n = sum_{k=1}^{n} sum_lambda <n;lambda;k> a_2^l2...a_n^ln (x) a_k,
// with a_1 = 1. Memoized; safe under concurrent first use.
TensorElement coproduct(int n);

// Multiplicative/linear extension of the coproduct to polynomials in the
// a-family (constants allowed).
TensorElement coproduct_poly(const Polynomial& p);

// Counit: the constant term.
Rational counit(const Polynomial& p);

// Antipode by the closed Lagrange-reversion formula
// S(a_n) = sum_{k=1}^{n-1} (-1)^k B_{n-1+k,k}(0, a_2, a_3, ...).
Polynomial antipode(int n);

// Antipode from the Hopf axiom, grade by grade:
// S(a_n) = -a_n - sum S(left) * right over the proper terms of Delta a_n.
// Independent route used to cross-check the closed formula.
Polynomial antipode_recursive(int n);

// Multiplicative extension of the closed-formula antipode.
Polynomial antipode_poly(const Polynomial& p);

// Coassociativity, counit laws and both antipode axioms on a_2..a_upto.
CheckReport check_hopf_axioms(int upto);

// Character of F: an algebra morphism to the scalars, determined by its
// values on a_2..a_N (the value on a_1 = 1 is 1). Bijective with unital
// exponential series of order N via f_n = <f, a_n>.
class Character {
public:
    Character(int order, std::vector<Rational> generator_values);

    static Character identity(int order); // all a_n -> 0: the series t
    static Character from_series(const ExpSeries& f);
    ExpSeries to_series() const;

    int order() const { return order_; }
    Rational on_generator(int n) const; // <f, a_n>, 2 <= n <= order
    Rational operator()(const Monomial& m) const;
    Rational operator()(const Polynomial& p) const;

    friend bool operator==(const Character&, const Character&) = default;

private:
    int order_;
    std::vector<Rational> values_; // a_2..a_order
};

// Convolution (f*g)(a_n) = m(f (x) g) Delta a_n; anti-isomorphic to
// composition: <f*g, a_n> is the n-th coefficient of g(f(t)).
Character convolve(const Character& f, const Character& g);

// Inverse under convolution: f o S.
Character convolution_inverse(const Character& f);

// Basis of the primitive elements of degree d, found by an exact linear
// solve over the monomial basis. Empty for d >= 3.
std::vector<Polynomial> primitive_space(int degree, int cap = 6);

// Monomials of the a-family of the given degree, in canonical order.
std::vector<Monomial> a_monomials_of_degree(int degree);

} // namespace fdb
