#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "fdb/errors.hpp"

namespace fdb {

// Exact scalars. Rational is always stored reduced with positive
// denominator, so equality is structural equality of the reduced form.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Int& v);

// "p/q" with q > 0, plain "p" when q == 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

Int factorial(int n);

// 0 outside 0 <= k <= n.
Int binomial(const Int& n, const Int& k);

// Block-type vector lambda = (lambda_1,...,lambda_n) with
// sum_i i*lambda_i = n. Stored at full length n; printing trims
// trailing zeros. The block count is k = sum_i lambda_i.
class TypeVector {
public:
    explicit TypeVector(std::vector<int> counts);

    int n() const { return n_; }
    int block_count() const { return k_; }
    int count(int i) const; // lambda_i, 1-based
    const std::vector<int>& counts() const { return counts_; }

    std::string to_string() const;

    friend bool operator==(const TypeVector&, const TypeVector&) = default;
    friend auto operator<=>(const TypeVector&, const TypeVector&) = default;

private:
    std::vector<int> counts_;
    int n_ = 0;
    int k_ = 0;
};

// <n; lambda; k> = n! / (lambda_1!...lambda_n! (1!)^l1 (2!)^l2 ... (n!)^ln).
// Counts the set partitions of {1..n} of type lambda.
Int fdb_multinomial(const TypeVector& tv);

// All type vectors of weight n (optionally with exactly k blocks),
// in ascending lexicographic order on lambda.
std::vector<TypeVector> type_vectors(int n);
std::vector<TypeVector> type_vectors(int n, int k);

} // namespace fdb
