#include "fdb/colour.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "fdb/partitions.hpp"
#include "fdb/series.hpp"

namespace fdb {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries))
{
    if (entries_.empty())
        throw DomainError("multi-indices need at least one colour");
    for (int e : entries_)
        if (e < 0)
            throw DomainError("multi-index entries must be non-negative");
}

int MultiIndex::weight() const
{
    int w = 0;
    for (int e : entries_)
        w += e;
    return w;
}

Int MultiIndex::index_factorial() const
{
    Int out = 1;
    for (int e : entries_)
        out *= factorial(e);
    return out;
}

int MultiIndex::entry(int colour) const
{
    if (colour < 1 || colour > vars())
        throw DomainError("multi-index colour " + std::to_string(colour) +
                          " out of range");
    return entries_[static_cast<std::size_t>(colour - 1)];
}

std::string MultiIndex::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(entries_[i]);
    }
    return out + ")";
}

int element_colour(const MultiIndex& shape, int element)
{
    int upper = 0;
    for (int c = 1; c <= shape.vars(); ++c) {
        upper += shape.entry(c);
        if (element <= upper)
            return c;
    }
    throw DomainError("element " + std::to_string(element) +
                      " outside the coloured ground set");
}

ColouredPartition::ColouredPartition(MultiIndex shape,
                                     std::vector<std::vector<int>> blocks,
                                     std::vector<int> block_colours)
    : shape_(std::move(shape)), blocks_(std::move(blocks)),
      block_colours_(std::move(block_colours))
{
    if (blocks_.size() != block_colours_.size())
        throw DomainError("coloured partition needs one colour per block");
    int n = shape_.weight();
    std::set<int> seen;
    for (auto& block : blocks_) {
        if (block.empty())
            throw DomainError("coloured partition has an empty block");
        std::sort(block.begin(), block.end());
        for (int e : block) {
            if (e < 1 || e > n || !seen.insert(e).second)
                throw DomainError("coloured partition blocks do not partition "
                                  "the ground set");
        }
    }
    if (static_cast<int>(seen.size()) != n)
        throw DomainError("coloured partition blocks do not cover the ground set");
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        int colour = block_colours_[b];
        if (colour < 1 || colour > shape_.vars())
            throw DomainError("block colour out of range");
        if (blocks_[b].size() == 1 &&
            colour != element_colour(shape_, blocks_[b][0]))
            throw DomainError("singleton blocks keep their element's colour");
    }
    // Canonical order: blocks by minimum element, colours riding along.
    std::vector<std::size_t> perm(blocks_.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return blocks_[a].front() < blocks_[b].front();
    });
    std::vector<std::vector<int>> sorted_blocks;
    std::vector<int> sorted_colours;
    for (std::size_t i : perm) {
        sorted_blocks.push_back(std::move(blocks_[i]));
        sorted_colours.push_back(block_colours_[i]);
    }
    blocks_ = std::move(sorted_blocks);
    block_colours_ = std::move(sorted_colours);
}

int ColouredPartition::element_colour(int element) const
{
    return fdb::element_colour(shape_, element);
}

MultiIndex ColouredPartition::block_content(int b) const
{
    if (b < 0 || b >= block_count())
        throw DomainError("block index out of range");
    std::vector<int> counts(static_cast<std::size_t>(shape_.vars()), 0);
    for (int e : blocks_[static_cast<std::size_t>(b)])
        ++counts[static_cast<std::size_t>(element_colour(e) - 1)];
    return MultiIndex(std::move(counts));
}

MultiIndex ColouredPartition::block_colour_counts() const
{
    std::vector<int> counts(static_cast<std::size_t>(shape_.vars()), 0);
    for (int c : block_colours_)
        ++counts[static_cast<std::size_t>(c - 1)];
    return MultiIndex(std::move(counts));
}

std::string ColouredPartition::to_string() const
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
        out += "}:" + std::to_string(block_colours_[b]);
    }
    return out + "}";
}

std::vector<ColouredPartition> enumerate_coloured_partitions(const MultiIndex& nbar,
                                                             int r, int weight_cap)
{
    int N = nbar.vars();
    if (N > kColourVarsCap)
        throw ResourceLimitError("coloured partitions capped at N <= " +
                                 std::to_string(kColourVarsCap));
    if (r < 1 || r > N)
        throw DomainError("colour " + std::to_string(r) + " out of range");
    int n = nbar.weight();
    if (n < 1)
        throw DomainError("coloured partitions need |nbar| >= 1");
    if (n > weight_cap)
        throw ResourceLimitError("coloured partitions capped at |nbar| <= " +
                                 std::to_string(weight_cap));
    std::vector<ColouredPartition> out;
    for (const auto& base : enumerate_partitions(n, weight_cap)) {
        // Colour every non-singleton block in all possible ways.
        std::vector<int> colours(static_cast<std::size_t>(base.block_count()), 0);
        auto rec = [&](auto&& self, std::size_t b) -> void {
            if (b == colours.size()) {
                out.emplace_back(nbar, base.blocks(), colours);
                return;
            }
            if (base.blocks()[b].size() == 1) {
                colours[b] = element_colour(nbar, base.blocks()[b][0]);
                self(self, b + 1);
                return;
            }
            for (int c = 1; c <= N; ++c) {
                colours[b] = c;
                self(self, b + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

Polynomial pi_generator(int colour, const MultiIndex& counts)
{
    if (counts.weight() < 1)
        throw DomainError("pi generators need weight >= 1");
    if (counts.weight() == 1) {
        for (int c = 1; c <= counts.vars(); ++c)
            if (counts.entry(c) == 1)
                return Polynomial(c == colour ? 1 : 0);
    }
    return Polynomial(Generator::pi(colour, counts.entries()));
}

TensorElement coloured_coproduct(int r, const MultiIndex& nbar, int weight_cap)
{
    TensorElement out;
    for (const auto& pi : enumerate_coloured_partitions(nbar, r, weight_cap)) {
        Polynomial left(1);
        for (int b = 0; b < pi.block_count(); ++b)
            left *= pi_generator(pi.block_colours()[static_cast<std::size_t>(b)],
                                 pi.block_content(b));
        Polynomial right = pi_generator(r, pi.block_colour_counts());
        out += TensorElement(left, right);
    }
    return out;
}

NSeries::NSeries(int vars, int cutoff, CoeffMap coeffs)
    : vars_(vars), cutoff_(cutoff), coeffs_(std::move(coeffs))
{
    if (vars_ < 1)
        throw DomainError("N-series need at least one variable");
    if (cutoff_ < 1)
        throw DomainError("N-series cutoff must be >= 1");
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        const auto& [key, value] = *it;
        const auto& [component, index] = key;
        if (component < 1 || component > vars_)
            throw DomainError("N-series component " + std::to_string(component) +
                              " out of range");
        if (static_cast<int>(index.size()) != vars_)
            throw DomainError("N-series index length differs from N");
        MultiIndex mi{index};
        if (mi.weight() < 2)
            throw DomainError("N-series linear part is implicit; coefficients "
                              "need |nbar| > 1");
        if (mi.weight() > cutoff_)
            throw DomainError("N-series coefficient beyond the cutoff");
        it = value == 0 ? coeffs_.erase(it) : std::next(it);
    }
}

NSeries NSeries::identity(int vars, int cutoff)
{
    return NSeries(vars, cutoff);
}

Rational NSeries::coeff(int component, const std::vector<int>& index) const
{
    if (component < 1 || component > vars_)
        throw DomainError("N-series component out of range");
    if (static_cast<int>(index.size()) != vars_)
        throw DomainError("N-series index length differs from N");
    MultiIndex mi{index};
    int w = mi.weight();
    if (w < 1 || w > cutoff_)
        throw DomainError("N-series coefficient index of weight " +
                          std::to_string(w) + " outside 1..cutoff");
    if (w == 1)
        return mi.entry(component) == 1 ? 1 : 0;
    auto it = coeffs_.find({component, index});
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational NSeries::operator()(const Polynomial& p) const
{
    if (auto f = p.family(); f && *f != Family::Pi)
        throw FamilyMismatchError("N-series characters act on the pi-family");
    Rational out = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (const auto& [g, e] : m.factors()) {
            const auto& pi = g.pi_index();
            for (int i = 0; i < e && term != 0; ++i)
                term *= coeff(pi.colour, pi.counts);
        }
        out += term;
    }
    return out;
}

namespace {

// Multi-indices 1 <= |m| and m <= bound componentwise, ascending.
std::vector<std::vector<int>> sub_indices(const std::vector<int>& bound)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current(bound.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == bound.size()) {
            int w = 0;
            for (int v : current)
                w += v;
            if (w >= 1)
                out.push_back(current);
            return;
        }
        for (int v = 0; v <= bound[pos]; ++v) {
            current[pos] = v;
            self(self, pos + 1);
        }
        current[pos] = 0;
    };
    rec(rec, 0);
    return out;
}

struct ComposeSlot {
    int colour;
    std::vector<int> index;
    int weight;
    Rational g_value;
    Int index_factorial;
};

} // namespace

NSeries nseries_compose(const NSeries& f, const NSeries& g)
{
    if (f.vars() != g.vars() || f.cutoff() != g.cutoff())
        throw OrderMismatchError("N-series composition needs matching N and cutoff");
    int N = f.vars();
    int M = f.cutoff();
    NSeries::CoeffMap result;
    std::vector<int> full(static_cast<std::size_t>(N), M);
    // Slots (i, mbar): the linear ones contribute only on the diagonal
    // since g has identity linear part.
    std::vector<ComposeSlot> slots;
    for (int i = 1; i <= N; ++i) {
        for (const auto& index : sub_indices(full)) {
            MultiIndex mi{index};
            if (mi.weight() > M)
                continue;
            Rational value = g.coeff(i, index);
            if (value == 0)
                continue;
            slots.push_back({i, index, mi.weight(), value, mi.index_factorial()});
        }
    }
    for (int r = 1; r <= N; ++r) {
        for (const auto& target : sub_indices(full)) {
            MultiIndex nbar{target};
            int weight = nbar.weight();
            if (weight < 2 || weight > M)
                continue;
            Rational total = 0;
            std::vector<int> khat(static_cast<std::size_t>(N), 0);
            std::vector<int> used(static_cast<std::size_t>(N), 0);
            // lambda over the slots; contribution
            // f^r_k * nbar! * prod g^lambda / (lambda! prod (mbar!)^lambda).
            auto rec = [&](auto&& self, std::size_t s, const Rational& partial) -> void {
                if (s == slots.size()) {
                    if (used == target) {
                        int kw = 0;
                        for (int v : khat)
                            kw += v;
                        if (kw >= 1)
                            total += partial * f.coeff(r, khat);
                    }
                    return;
                }
                const ComposeSlot& slot = slots[s];
                int max_count = weight; // slot weight >= 1 bounds the count anyway
                for (int c = 0; c < N; ++c)
                    if (slot.index[static_cast<std::size_t>(c)] > 0)
                        max_count = std::min(
                            max_count, (target[static_cast<std::size_t>(c)] -
                                        used[static_cast<std::size_t>(c)]) /
                                           slot.index[static_cast<std::size_t>(c)]);
                self(self, s + 1, partial); // count = 0
                Rational factor = partial;
                for (int count = 1; count <= max_count; ++count) {
                    for (int c = 0; c < N; ++c)
                        used[static_cast<std::size_t>(c)] +=
                            slot.index[static_cast<std::size_t>(c)];
                    khat[static_cast<std::size_t>(slot.colour - 1)] += 1;
                    factor *= slot.g_value /
                              (Rational(count) * Rational(slot.index_factorial));
                    self(self, s + 1, factor);
                }
                for (int c = 0; c < N; ++c)
                    used[static_cast<std::size_t>(c)] -=
                        slot.index[static_cast<std::size_t>(c)] * max_count;
                khat[static_cast<std::size_t>(slot.colour - 1)] -= max_count;
            };
            rec(rec, 0, Rational(nbar.index_factorial()));
            if (total != 0)
                result[{r, target}] = total;
        }
    }
    return NSeries(N, M, std::move(result));
}

NSeries coloured_convolution(const NSeries& g, const NSeries& f, int weight_cap)
{
    if (f.vars() != g.vars() || f.cutoff() != g.cutoff())
        throw OrderMismatchError("convolution needs matching N and cutoff");
    int N = f.vars();
    int M = f.cutoff();
    if (M > weight_cap)
        throw ResourceLimitError("coloured convolution capped at cutoff <= " +
                                 std::to_string(weight_cap));
    NSeries::CoeffMap result;
    std::vector<int> full(static_cast<std::size_t>(N), M);
    for (int r = 1; r <= N; ++r) {
        for (const auto& target : sub_indices(full)) {
            MultiIndex nbar{target};
            if (nbar.weight() < 2 || nbar.weight() > M)
                continue;
            Rational total = 0;
            for (const auto& pi :
                 enumerate_coloured_partitions(nbar, r, weight_cap)) {
                Rational term = f.coeff(r, pi.block_colour_counts().entries());
                for (int b = 0; b < pi.block_count() && term != 0; ++b)
                    term *= g.coeff(pi.block_colours()[static_cast<std::size_t>(b)],
                                    pi.block_content(b).entries());
                total += term;
            }
            if (total != 0)
                result[{r, target}] = total;
        }
    }
    return NSeries(N, M, std::move(result));
}

namespace {

Polynomial antipode_colour_monomial(const Monomial& m, int weight_cap,
                                    std::map<std::pair<int, std::vector<int>>,
                                             Polynomial>& memo);

Polynomial antipode_colour_generator(int r, const MultiIndex& nbar, int weight_cap,
                                     std::map<std::pair<int, std::vector<int>>,
                                              Polynomial>& memo)
{
    auto key = std::make_pair(r, nbar.entries());
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    Polynomial s{Monomial(Generator::pi(r, nbar.entries())), -1};
    for (const auto& [legs, c] : coloured_coproduct(r, nbar, weight_cap).terms()) {
        if (legs.first.is_unit() || legs.second.is_unit())
            continue;
        s -= c * (antipode_colour_monomial(legs.first, weight_cap, memo) *
                  Polynomial(legs.second));
    }
    memo.emplace(std::move(key), s);
    return s;
}

Polynomial antipode_colour_monomial(const Monomial& m, int weight_cap,
                                    std::map<std::pair<int, std::vector<int>>,
                                             Polynomial>& memo)
{
    Polynomial out(1);
    for (const auto& [g, e] : m.factors()) {
        const auto& pi = g.pi_index();
        out *= antipode_colour_generator(pi.colour, MultiIndex(pi.counts),
                                         weight_cap, memo)
                   .pow(e);
    }
    return out;
}

} // namespace

Polynomial nseries_antipode(int r, const MultiIndex& nbar, int weight_cap)
{
    if (nbar.weight() < 2)
        throw DomainError("antipode recursion applies to generators of weight >= 2");
    std::map<std::pair<int, std::vector<int>>, Polynomial> memo;
    return antipode_colour_generator(r, nbar, weight_cap, memo);
}

NSeries nseries_revert(const NSeries& f)
{
    int N = f.vars();
    int M = f.cutoff();
    if (M > kColourWeightCap)
        throw ResourceLimitError("N-series reversion capped at cutoff <= " +
                                 std::to_string(kColourWeightCap));
    std::map<std::pair<int, std::vector<int>>, Polynomial> memo;
    NSeries::CoeffMap result;
    std::vector<int> full(static_cast<std::size_t>(N), M);
    for (int r = 1; r <= N; ++r) {
        for (const auto& index : sub_indices(full)) {
            MultiIndex nbar{index};
            if (nbar.weight() < 2 || nbar.weight() > M)
                continue;
            Rational value = f(antipode_colour_generator(r, nbar, kColourWeightCap,
                                                         memo));
            if (value != 0)
                result[{r, index}] = value;
        }
    }
    return NSeries(N, M, std::move(result));
}

CheckReport check_nseries_suite(int upto)
{
    if (upto < 2)
        throw DomainError("check_nseries_suite needs upto >= 2");
    std::mt19937 rng(20240917u);
    auto random_rational = [&rng]() {
        std::uniform_int_distribution<int> num(-6, 6);
        std::uniform_int_distribution<int> den(1, 4);
        return Rational(num(rng), den(rng));
    };

    // N = 1 reduction against the one-variable stack.
    int order = std::min(upto, 6);
    for (int trial = 0; trial < 5; ++trial) {
        NSeries::CoeffMap fc, gc;
        std::vector<Rational> f1{Rational(1)}, g1{Rational(1)};
        for (int n = 2; n <= order; ++n) {
            Rational a = random_rational();
            Rational b = random_rational();
            if (a != 0)
                fc[{1, {n}}] = a;
            if (b != 0)
                gc[{1, {n}}] = b;
            f1.push_back(a);
            g1.push_back(b);
        }
        NSeries fN(1, order, fc), gN(1, order, gc);
        ExpSeries fS(order, f1), gS(order, g1);
        ExpSeries composed = compose(fS, gS);
        NSeries composedN = nseries_compose(fN, gN);
        for (int n = 2; n <= order; ++n)
            if (composedN.coeff(1, {n}) != composed.coeff(n))
                return {false, "N=1 composition disagrees with the 1-variable "
                               "stack at n = " +
                                   std::to_string(n)};
        ExpSeries reverted = revert(fS);
        NSeries revertedN = nseries_revert(fN);
        for (int n = 2; n <= order; ++n)
            if (revertedN.coeff(1, {n}) != reverted.coeff(n))
                return {false, "N=1 reversion disagrees with the 1-variable "
                               "stack at n = " +
                                   std::to_string(n)};
    }
    // N = 1 coproduct reduction.
    for (int n = 2; n <= std::min(upto, 5); ++n) {
        TensorElement coloured = coloured_coproduct(1, MultiIndex{{n}});
        auto to_a = [](const Monomial& m) {
            Polynomial out(1);
            for (const auto& [g, e] : m.factors())
                out *= Polynomial(
                    Monomial(Generator::a(MultiIndex(g.pi_index().counts).weight()),
                             e));
            return out;
        };
        if (coloured.map_legs(to_a, to_a) != coproduct(n))
            return {false, "coloured coproduct does not reduce to Delta a_" +
                               std::to_string(n)};
    }

    // N = 2 routes and reversion round trips.
    int M = std::min(upto, 4);
    for (int trial = 0; trial < 3; ++trial) {
        auto random_nseries = [&](int N) {
            NSeries::CoeffMap coeffs;
            std::vector<int> full(static_cast<std::size_t>(N), M);
            for (int r = 1; r <= N; ++r)
                for (const auto& index : sub_indices(full)) {
                    MultiIndex mi{index};
                    if (mi.weight() < 2 || mi.weight() > M)
                        continue;
                    Rational v = random_rational();
                    if (v != 0)
                        coeffs[{r, index}] = v;
                }
            return NSeries(N, M, std::move(coeffs));
        };
        NSeries f = random_nseries(2);
        NSeries g = random_nseries(2);
        if (nseries_compose(f, g) != coloured_convolution(g, f))
            return {false, "nseries_compose and coloured_convolution disagree"};
        NSeries inverse = nseries_revert(f);
        NSeries id = NSeries::identity(2, M);
        if (nseries_compose(f, inverse) != id || nseries_compose(inverse, f) != id)
            return {false, "nseries_revert does not invert composition"};
    }
    return {true, "N-series reductions, route equivalence and reversion verified"};
}

} // namespace fdb
