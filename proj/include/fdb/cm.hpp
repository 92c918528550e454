#pragma once

#include <string>
#include <vector>

#include "fdb/poly.hpp"

namespace fdb {

inline constexpr int kDeltaCoproductCap = 8;

// Composition (n_1,...,n_r) of positive integers; weight n = sum n_i,
// length r. Members of N_n are the compositions of weight n; N'_n those
// with r > 1.
class CompositionVector {
public:
    explicit CompositionVector(std::vector<int> parts);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    bool is_proper() const { return length() > 1; }

    std::string to_string() const;

    friend bool operator==(const CompositionVector&, const CompositionVector&) = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All compositions of n, lexicographic.
std::vector<CompositionVector> compositions(int n);

// delta_n = sum_{k=1}^{n} (-1)^{k-1} (k-1)! B_{n,k}(a_2,...,a_{n+2-k}).
Polynomial delta_in_a(int n);

// a_{n+1} = sum_{k=1}^{n} B_{n,k}(delta_1,...,delta_{n+1-k}).
Polynomial a_in_delta(int n);

// Substitution images a_m -> polynomial in delta, for 2 <= m <= max_index.
std::map<Generator, Polynomial> a_to_delta_images(int max_index);
// Substitution images delta_m -> polynomial in a, for 1 <= m <= max_index.
std::map<Generator, Polynomial> delta_to_a_images(int max_index);

// Delta delta_n computed through the a-coordinates: substitute, apply the
// coproduct, rewrite both legs back in delta.
TensorElement coproduct_delta(int n, int cap = kDeltaCoproductCap);

// Bilinear part B(delta_n) = sum_{i=1}^{n-1} C(n,i-1) delta_{n-i} (x) delta_i;
// empty for n < 2.
TensorElement bilinear_part(int n);

// K^{n_1,...,n_{r-1}}_{n_r} of the closed coproduct formula. The inner sum
// runs over splits of (n_1,...,n_{r-1}) into k consecutive nonempty
// segments; each segment contributes 1/(1 + entry sum), and a split of
// segment lengths r^1..r^k carries 1/(r^1! ... r^k!).
Rational k_coefficient(const CompositionVector& nbar);

// Delta delta_n assembled from the closed formula:
// delta_n (x) 1 + 1 (x) delta_n
//   + sum_{nbar in N'_n} n!/(n_1!...n_r!) K * delta_{n_1}...delta_{n_{r-1}} (x) delta_{n_r}.
TensorElement coproduct_delta_closed(int n, int cap = kDeltaCoproductCap);

} // namespace fdb
