#pragma once

#include <span>
#include <string>
#include <vector>

#include "fdb/exact.hpp"
#include "fdb/poly.hpp"

namespace fdb {

// Enumeration caps, sized for desk-scale Bell-number growth.
inline constexpr int kPartitionCap = 12;
inline constexpr int kIncidenceCap = 9;

// Partition of {1,...,n} into nonempty disjoint blocks. Canonical form:
// each block sorted, blocks ordered by their minimum.
class SetPartition {
public:
    SetPartition(int n, std::vector<std::vector<int>> blocks);

    int ground_size() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    bool refines(const SetPartition& coarser) const;

    std::string to_string() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
};

// All partitions of {1,...,n} in restricted-growth-string order; the count
// is the Bell number.
std::vector<SetPartition> enumerate_partitions(int n, int cap = kPartitionCap);

// Type (alpha_1,...,alpha_n): alpha_i blocks of size i.
TypeVector partition_type(const SetPartition& p);

// Lambda vector of the interval [fine, coarse]: lambda_i blocks of the
// coarser partition are unions of exactly i blocks of the finer one.
TypeVector refinement_interval_vector(const SetPartition& fine,
                                      const SetPartition& coarse);

// Partial exponential Bell polynomial B_{n,k}. The symbolic form lives in
// the abstract slots x_1,...,x_{n+1-k}; the evaluated forms substitute
// args[i-1] for x_i (args must cover x_1..x_{n+1-k}).
Polynomial bell_partial(int n, int k);
Rational bell_partial(int n, int k, std::span<const Rational> args);
Polynomial bell_partial(int n, int k, std::span<const Polynomial> args);

// B_{n,k}(1,...,1): partitions of an n-set into k blocks.
Int stirling2(int n, int k);

// Partial sum up to n = upto of sum_k B_{n,k}(1,...,1)/n!, the groupoid
// cardinality of finite sets with a partition; converges to e^{e-1}.
Rational groupoid_cardinality(int upto);

// Coproduct of the incidence Hopf algebra of partition-lattice intervals,
// rendered in the a-family under a_n <-> Pi~_n (with a_1 = 1): the sum
// over partitions pi of (prod_B a_{|B|}) (x) a_{|pi|}.
TensorElement incidence_coproduct(int n, int cap = kIncidenceCap);

} // namespace fdb
