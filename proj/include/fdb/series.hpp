#pragma once

#include <string>
#include <vector>

#include "fdb/exact.hpp"

namespace fdb {

// Truncated exponential series f(t) = sum_{n=1}^{N} f_n t^n / n! with no
// constant term. Coefficients are stored in exponential normalization
// (f_n, not f_n/n!).
class ExpSeries {
public:
    ExpSeries(int order, std::vector<Rational> coeffs);

    static ExpSeries identity(int order); // f_1 = 1, rest 0

    int order() const { return static_cast<int>(coeffs_.size()); }
    const Rational& coeff(int n) const; // 1-based
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_unital() const { return coeffs_[0] == 1; }

    std::string to_string() const;

    friend bool operator==(const ExpSeries&, const ExpSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

// h_n = sum_{k=1}^{n} f_k B_{n,k}(g_1,...,g_{n+1-k}): the coefficients of
// f(g(t)) truncated to the common order.
ExpSeries compose(const ExpSeries& f, const ExpSeries& g);

// Same composition computed by raw truncated substitution and Cauchy
// products, with no Bell polynomials; kept as an independent route.
ExpSeries compose_oracle(const ExpSeries& f, const ExpSeries& g);

// Lagrange reversion g of a unital series f: g_1 = 1 and
// g_n = sum_{k=1}^{n-1} (-1)^k B_{n-1+k,k}(0, f_2, f_3, ...), so that
// f(g(t)) = g(f(t)) = t to the truncation order.
ExpSeries revert(const ExpSeries& f);

// E n!/F^n with E = AC/(A+D), F = BD/(A+D): the analyticity majorant for
// |h_n| when |g_m| <= A m!/B^m and |f_k| <= C k!/D^k.
Rational majorant_bound(const Rational& A, const Rational& B, const Rational& C,
                        const Rational& D, int n);

} // namespace fdb
