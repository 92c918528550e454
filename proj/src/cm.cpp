#include "fdb/cm.hpp"

#include "fdb/hopf.hpp"
#include "fdb/partitions.hpp"

namespace fdb {

CompositionVector::CompositionVector(std::vector<int> parts)
    : parts_(std::move(parts))
{
    if (parts_.empty())
        throw DomainError("compositions have at least one part");
    for (int p : parts_) {
        if (p < 1)
            throw DomainError("composition parts must be positive");
        weight_ += p;
    }
}

std::string CompositionVector::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<CompositionVector> compositions(int n)
{
    if (n < 1)
        throw DomainError("compositions need n >= 1");
    std::vector<CompositionVector> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p);
            parts.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

Polynomial delta_in_a(int n)
{
    if (n < 1)
        throw DomainError("delta_in_a needs n >= 1");
    // Arguments x_i = a_{i+1}; B_{n,k} reads x_1..x_{n+1-k}.
    std::vector<Polynomial> args;
    args.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        args.emplace_back(Generator::a(i + 1));
    Polynomial out;
    for (int k = 1; k <= n; ++k) {
        Polynomial term = Rational(factorial(k - 1)) *
                          bell_partial(n, k, std::span<const Polynomial>(args));
        if (k % 2 == 1)
            out += term;
        else
            out -= term;
    }
    return out;
}

Polynomial a_in_delta(int n)
{
    if (n < 1)
        throw DomainError("a_in_delta needs n >= 1");
    std::vector<Polynomial> args;
    args.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        args.emplace_back(Generator::delta(i));
    Polynomial out;
    for (int k = 1; k <= n; ++k)
        out += bell_partial(n, k, std::span<const Polynomial>(args));
    return out;
}

std::map<Generator, Polynomial> a_to_delta_images(int max_index)
{
    std::map<Generator, Polynomial> images;
    for (int m = 2; m <= max_index; ++m)
        images.emplace(Generator::a(m), a_in_delta(m - 1));
    return images;
}

std::map<Generator, Polynomial> delta_to_a_images(int max_index)
{
    std::map<Generator, Polynomial> images;
    for (int m = 1; m <= max_index; ++m)
        images.emplace(Generator::delta(m), delta_in_a(m));
    return images;
}

TensorElement coproduct_delta(int n, int cap)
{
    if (n < 1)
        throw DomainError("coproduct_delta needs n >= 1");
    if (n > cap)
        throw ResourceLimitError("delta coproduct capped at n <= " +
                                 std::to_string(cap));
    TensorElement in_a = coproduct_poly(delta_in_a(n));
    auto images = a_to_delta_images(n + 1);
    auto rewrite = [&images](const Monomial& m) {
        return Polynomial(m).substitute(images);
    };
    return in_a.map_legs(rewrite, rewrite);
}

TensorElement bilinear_part(int n)
{
    TensorElement out;
    for (int i = 1; i <= n - 1; ++i)
        out.add_term(Monomial(Generator::delta(n - i)), Monomial(Generator::delta(i)),
                     Rational(binomial(n, i - 1)));
    return out;
}

Rational k_coefficient(const CompositionVector& nbar)
{
    if (nbar.length() < 2)
        throw DomainError("k_coefficient needs a composition of length >= 2");
    const auto& parts = nbar.parts();
    int r = nbar.length();
    int last = parts[static_cast<std::size_t>(r - 1)];
    Rational total = 0;
    // Split positions 0..r-2 of the prefix into k consecutive segments.
    std::vector<int> segment_lengths;
    auto rec = [&](auto&& self, int start, int k_left, Rational partial) -> void {
        int remaining = (r - 1) - start;
        if (k_left == 0) {
            if (remaining == 0) {
                Rational weight = 1;
                for (int len : segment_lengths)
                    weight /= Rational(factorial(len));
                total += partial * weight;
            }
            return;
        }
        // Each remaining segment needs at least one entry.
        for (int len = 1; len <= remaining - (k_left - 1); ++len) {
            int sum = 0;
            for (int j = start; j < start + len; ++j)
                sum += parts[static_cast<std::size_t>(j)];
            segment_lengths.push_back(len);
            self(self, start + len, k_left - 1, partial / Rational(1 + sum));
            segment_lengths.pop_back();
        }
    };
    for (int k = 1; k <= r - 1; ++k) {
        Int binom = binomial(last, k);
        if (binom == 0)
            continue;
        rec(rec, 0, k, Rational(binom));
    }
    return total;
}

TensorElement coproduct_delta_closed(int n, int cap)
{
    if (n < 1)
        throw DomainError("coproduct_delta_closed needs n >= 1");
    if (n > cap)
        throw ResourceLimitError("delta coproduct capped at n <= " +
                                 std::to_string(cap));
    TensorElement out;
    Monomial dn{Generator::delta(n)};
    out.add_term(dn, Monomial{}, 1);
    out.add_term(Monomial{}, dn, 1);
    Rational n_fact{factorial(n)};
    for (const auto& nbar : compositions(n)) {
        if (!nbar.is_proper())
            continue;
        const auto& parts = nbar.parts();
        Rational multinomial = n_fact;
        for (int p : parts)
            multinomial /= Rational(factorial(p));
        Rational coeff = multinomial * k_coefficient(nbar);
        if (coeff == 0)
            continue;
        std::vector<std::pair<Generator, int>> left;
        for (int i = 0; i + 1 < static_cast<int>(parts.size()); ++i)
            left.emplace_back(Generator::delta(parts[static_cast<std::size_t>(i)]), 1);
        out.add_term(Monomial(std::move(left)),
                     Monomial(Generator::delta(parts.back())), coeff);
    }
    return out;
}

} // namespace fdb
