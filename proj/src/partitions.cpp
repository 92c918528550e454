#include "fdb/partitions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fdb {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks))
{
    if (n_ < 1)
        throw DomainError("set partitions need ground size >= 1");
    std::set<int> seen;
    for (auto& block : blocks_) {
        if (block.empty())
            throw DomainError("set partition has an empty block");
        std::sort(block.begin(), block.end());
        for (int e : block) {
            if (e < 1 || e > n_)
                throw DomainError("set partition element " + std::to_string(e) +
                                  " outside {1.." + std::to_string(n_) + "}");
            if (!seen.insert(e).second)
                throw DomainError("set partition blocks are not disjoint");
        }
    }
    if (static_cast<int>(seen.size()) != n_)
        throw DomainError("set partition blocks do not cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

bool SetPartition::refines(const SetPartition& coarser) const
{
    if (n_ != coarser.n_)
        return false;
    std::vector<int> owner(static_cast<std::size_t>(n_) + 1, -1);
    for (std::size_t b = 0; b < coarser.blocks_.size(); ++b)
        for (int e : coarser.blocks_[b])
            owner[static_cast<std::size_t>(e)] = static_cast<int>(b);
    for (const auto& block : blocks_) {
        int target = owner[static_cast<std::size_t>(block.front())];
        for (int e : block)
            if (owner[static_cast<std::size_t>(e)] != target)
                return false;
    }
    return true;
}

std::string SetPartition::to_string() const
{
    std::string out = "{";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b)
            out += ",";
        out += "{";
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(blocks_[b][i]);
        }
        out += "}";
    }
    return out + "}";
}

std::vector<SetPartition> enumerate_partitions(int n, int cap)
{
    if (n < 1)
        throw DomainError("enumerate_partitions needs n >= 1");
    if (n > cap)
        throw ResourceLimitError("partition enumeration capped at n <= " +
                                 std::to_string(cap));
    // Restricted growth strings in lexicographic order: rgs[0] = 0 and
    // rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<SetPartition> out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto emit = [&] {
        int block_count = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(block_count));
        for (int i = 0; i < n; ++i)
            blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])]
                .push_back(i + 1);
        out.emplace_back(n, std::move(blocks));
    };
    auto step = [&](auto&& self, int i, int max_used) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int v = 0; v <= max_used + 1; ++v) {
            rgs[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, std::max(max_used, v));
        }
    };
    step(step, 1, 0);
    return out;
}

TypeVector partition_type(const SetPartition& p)
{
    std::vector<int> alpha(static_cast<std::size_t>(p.ground_size()), 0);
    for (const auto& block : p.blocks())
        ++alpha[block.size() - 1];
    return TypeVector(std::move(alpha));
}

TypeVector refinement_interval_vector(const SetPartition& fine,
                                      const SetPartition& coarse)
{
    if (!fine.refines(coarse))
        throw DomainError("refinement_interval_vector: first partition does not "
                          "refine the second");
    // lambda_i = number of coarse blocks that are unions of i fine blocks.
    std::vector<int> owner(static_cast<std::size_t>(fine.ground_size()) + 1, -1);
    for (std::size_t b = 0; b < coarse.blocks().size(); ++b)
        for (int e : coarse.blocks()[b])
            owner[static_cast<std::size_t>(e)] = static_cast<int>(b);
    std::vector<int> parts_inside(coarse.blocks().size(), 0);
    for (const auto& block : fine.blocks())
        ++parts_inside[static_cast<std::size_t>(owner[static_cast<std::size_t>(
            block.front())])];
    std::vector<int> lambda(static_cast<std::size_t>(fine.block_count()), 0);
    for (int c : parts_inside)
        ++lambda[static_cast<std::size_t>(c - 1)];
    return TypeVector(std::move(lambda));
}

Polynomial bell_partial(int n, int k)
{
    if (n < 1 || k < 1 || k > n)
        throw DomainError("bell_partial needs 1 <= k <= n");
    Polynomial out;
    for (const auto& tv : type_vectors(n, k)) {
        std::vector<std::pair<Generator, int>> factors;
        for (int i = 1; i <= tv.n(); ++i)
            if (tv.count(i) > 0)
                factors.emplace_back(Generator::x(i), tv.count(i));
        out += Polynomial(Monomial(std::move(factors)), Rational(fdb_multinomial(tv)));
    }
    return out;
}

Rational bell_partial(int n, int k, std::span<const Rational> args)
{
    if (n < 1 || k < 1 || k > n)
        throw DomainError("bell_partial needs 1 <= k <= n");
    if (static_cast<int>(args.size()) < n + 1 - k)
        throw DomainError("bell_partial needs arguments x_1..x_" +
                          std::to_string(n + 1 - k));
    Rational out = 0;
    for (const auto& tv : type_vectors(n, k)) {
        Rational term(fdb_multinomial(tv));
        for (int i = 1; i <= tv.n() && term != 0; ++i)
            for (int j = 0; j < tv.count(i); ++j)
                term *= args[static_cast<std::size_t>(i - 1)];
        out += term;
    }
    return out;
}

Polynomial bell_partial(int n, int k, std::span<const Polynomial> args)
{
    if (n < 1 || k < 1 || k > n)
        throw DomainError("bell_partial needs 1 <= k <= n");
    if (static_cast<int>(args.size()) < n + 1 - k)
        throw DomainError("bell_partial needs arguments x_1..x_" +
                          std::to_string(n + 1 - k));
    Polynomial out;
    for (const auto& tv : type_vectors(n, k)) {
        Polynomial term{Rational(fdb_multinomial(tv))};
        for (int i = 1; i <= tv.n() && !term.is_zero(); ++i)
            term *= args[static_cast<std::size_t>(i - 1)].pow(tv.count(i));
        out += term;
    }
    return out;
}

Int stirling2(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        throw DomainError("stirling2 needs 0 <= k <= n");
    if (n == 0)
        return 1; // k == 0 here
    if (k == 0)
        return 0;
    Int out = 0;
    for (const auto& tv : type_vectors(n, k))
        out += fdb_multinomial(tv);
    return out;
}

Rational groupoid_cardinality(int upto)
{
    if (upto < 0)
        throw DomainError("groupoid_cardinality needs upto >= 0");
    Rational sum = 1; // n = 0 term
    for (int n = 1; n <= upto; ++n) {
        Int bell = 0;
        for (int k = 1; k <= n; ++k)
            bell += stirling2(n, k);
        sum += Rational(bell, factorial(n));
    }
    return sum;
}

TensorElement incidence_coproduct(int n, int cap)
{
    if (n < 1)
        throw DomainError("incidence_coproduct needs n >= 1");
    if (n > cap)
        throw ResourceLimitError("incidence coproduct capped at n <= " +
                                 std::to_string(cap));
    auto a_power = [](int m) {
        // a_1 = 1.
        return m == 1 ? Monomial{} : Monomial(Generator::a(m));
    };
    TensorElement out;
    for (const auto& pi : enumerate_partitions(n, cap)) {
        Monomial left;
        for (const auto& block : pi.blocks())
            left = left * a_power(static_cast<int>(block.size()));
        out.add_term(left, a_power(pi.block_count()), 1);
    }
    return out;
}

} // namespace fdb
