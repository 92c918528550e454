#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fdb/hopf.hpp"
#include "fdb/poly.hpp"

namespace fdb {

inline constexpr int kColourWeightCap = 7; // |nbar|
inline constexpr int kColourVarsCap = 3;   // N

// Element of N^N: colour counts. |nbar| is the weight, nbar! the product
// of entry factorials.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> entries);

    int vars() const { return static_cast<int>(entries_.size()); }
    int weight() const;
    Int index_factorial() const;
    int entry(int colour) const; // 1-based
    const std::vector<int>& entries() const { return entries_; }

    std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> entries_;
};

// Partition of the canonical coloured ground set of shape nbar (elements
// 1..|nbar|, the first n_1 of colour 1, the next n_2 of colour 2, ...),
// with a colour assigned to every block; singleton blocks keep their
// element's colour.
class ColouredPartition {
public:
    ColouredPartition(MultiIndex shape, std::vector<std::vector<int>> blocks,
                      std::vector<int> block_colours);

    const MultiIndex& shape() const { return shape_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block_colours() const { return block_colours_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    int element_colour(int element) const;
    // |B|: colour counts of the elements of block b (0-based index).
    MultiIndex block_content(int b) const;
    // |pi|: colour counts of the blocks themselves.
    MultiIndex block_colour_counts() const;

    std::string to_string() const;

    friend bool operator==(const ColouredPartition&, const ColouredPartition&) = default;

private:
    MultiIndex shape_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_colours_;
};

int element_colour(const MultiIndex& shape, int element);

// All coloured partitions of the canonical set of shape nbar (the poset
// Pi^r_nbar; the ambient colour r only affects the coproduct). Singleton
// colours are forced, non-singleton blocks range over all N colours.
std::vector<ColouredPartition> enumerate_coloured_partitions(
    const MultiIndex& nbar, int r, int weight_cap = kColourWeightCap);

// Pi~^colour_counts as a polynomial: weight-1 indices collapse to the
// constants delta_{colour,s}, mirroring a_1 = 1.
Polynomial pi_generator(int colour, const MultiIndex& counts);

// Delta Pi~^r_nbar = sum_pi (prod_B Pi~^{theta(B)}_{|B|}) (x) Pi~^r_{|pi|}.
TensorElement coloured_coproduct(int r, const MultiIndex& nbar,
                                 int weight_cap = kColourWeightCap);

// Exponential N-series with identity linear part: component r holds
// t_r + sum_{|nbar|>1} f^r_nbar t^nbar / nbar!. Only the coefficients
// with 1 < |nbar| <= cutoff are stored; the linear part is implicit.
class NSeries {
public:
    using CoeffMap = std::map<std::pair<int, std::vector<int>>, Rational>;

    NSeries(int vars, int cutoff, CoeffMap coeffs = {});

    static NSeries identity(int vars, int cutoff);

    int vars() const { return vars_; }
    int cutoff() const { return cutoff_; }
    const CoeffMap& stored_coeffs() const { return coeffs_; }

    // f^r_nbar for 1 <= |nbar| <= cutoff; weight-1 lookups return the
    // identity linear part delta_{r,s}.
    Rational coeff(int component, const std::vector<int>& index) const;

    // Character evaluation on a Pi-family polynomial.
    Rational operator()(const Polynomial& p) const;

    friend bool operator==(const NSeries&, const NSeries&) = default;

private:
    int vars_;
    int cutoff_;
    CoeffMap coeffs_;
};

// Coefficients of f(g(t)) truncated to the common cutoff, by the
// multivariate Faa di Bruno sum over block-count families lambda.
NSeries nseries_compose(const NSeries& f, const NSeries& g);

// Convolution of characters of F(N) by the coloured-partition sum
// g*f(Pi~^r_nbar) = sum_pi f^r_{|pi|} prod_B g^{theta(B)}_{|B|};
// anti-isomorphism: equals the coefficients of f o g.
NSeries coloured_convolution(const NSeries& g, const NSeries& f,
                             int weight_cap = kColourWeightCap);

// Antipode of F(N) by the grade recursion
// S(x) = -x - sum S(left) * right over proper coproduct terms.
Polynomial nseries_antipode(int r, const MultiIndex& nbar,
                            int weight_cap = kColourWeightCap);

// Compositional inverse to the cutoff: evaluates the character of f on
// the antipode, the multivariate Lagrange reversion.
NSeries nseries_revert(const NSeries& f);

// Bundled consistency suite: N = 1 reduction against the one-variable
// stack, route equivalence compose vs convolution, reversion round trips.
CheckReport check_nseries_suite(int upto);

} // namespace fdb
