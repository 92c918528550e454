#include "fdb/exact.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace fdb {

std::string to_string(const Int& v)
{
    return v.str();
}

std::string to_string(const Rational& r)
{
    // cpp_rational prints "p/q" and omits "/1" on its own.
    return r.str();
}

Rational parse_rational(std::string_view text)
{
    auto digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };

    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
        negative = num.front() == '-';
        num.remove_prefix(1);
    }
    if (!digits(num) || !digits(den))
        throw ParseError("malformed rational \"" + std::string(text) +
                         "\": expected p/q with q > 0");
    Int d{std::string(den)};
    if (d == 0)
        throw ParseError("malformed rational \"" + std::string(text) +
                         "\": zero denominator");
    Int p{std::string(num)};
    if (negative)
        p = -p;
    return Rational(p, d);
}

double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

Int factorial(int n)
{
    if (n < 0)
        throw DomainError("factorial of negative argument " + std::to_string(n));
    Int result = 1;
    for (int i = 2; i <= n; ++i)
        result *= i;
    return result;
}

Int binomial(const Int& n, const Int& k)
{
    if (k < 0 || k > n)
        return 0;
    Int kk = k;
    if (n - k < kk)
        kk = n - k;
    Int result = 1;
    for (Int i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i; // exact at every step
    }
    return result;
}

TypeVector::TypeVector(std::vector<int> counts) : counts_(std::move(counts))
{
    long long n = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] < 0)
            throw DomainError("type vector entry lambda_" + std::to_string(i + 1) +
                              " is negative");
        n += static_cast<long long>(i + 1) * counts_[i];
        k_ += counts_[i];
    }
    if (n < 1)
        throw DomainError("type vector has weight 0");
    n_ = static_cast<int>(n);
    // Entries past position n are necessarily zero; store exactly n of them.
    counts_.resize(static_cast<std::size_t>(n_), 0);
    if (k_ < 1 || k_ > n_)
        throw DomainError("type vector block count out of range");
}

int TypeVector::count(int i) const
{
    if (i < 1 || i > n_)
        throw DomainError("type vector index " + std::to_string(i) + " out of range");
    return counts_[static_cast<std::size_t>(i - 1)];
}

std::string TypeVector::to_string() const
{
    std::size_t last = counts_.size();
    while (last > 1 && counts_[last - 1] == 0)
        --last;
    std::string out = "(";
    for (std::size_t i = 0; i < last; ++i) {
        if (i)
            out += ",";
        out += std::to_string(counts_[i]);
    }
    out += ")";
    return out;
}

Int fdb_multinomial(const TypeVector& tv)
{
    Int denom = 1;
    for (int i = 1; i <= tv.n(); ++i) {
        int li = tv.count(i);
        if (li == 0)
            continue;
        denom *= factorial(li);
        Int fi = factorial(i);
        for (int j = 0; j < li; ++j)
            denom *= fi;
    }
    Int num = factorial(tv.n());
    Int q, r;
    boost::multiprecision::divide_qr(num, denom, q, r);
    if (r != 0)
        throw DomainError("fdb_multinomial is not integral for " + tv.to_string());
    return q;
}

namespace {

void enumerate_types(int position, int weight_left, int blocks_left, bool fixed_k,
                     int n, std::vector<int>& lambda, std::vector<TypeVector>& out)
{
    if (position > n) {
        if (weight_left == 0 && (!fixed_k || blocks_left == 0))
            out.emplace_back(lambda);
        return;
    }
    if (fixed_k) {
        // Remaining blocks each weigh at least `position` and at most n.
        if (static_cast<long long>(blocks_left) * position > weight_left)
            return;
        if (static_cast<long long>(blocks_left) * n < weight_left)
            return;
    }
    int max_count = weight_left / position;
    if (fixed_k && blocks_left < max_count)
        max_count = blocks_left;
    for (int c = 0; c <= max_count; ++c) {
        lambda[static_cast<std::size_t>(position - 1)] = c;
        enumerate_types(position + 1, weight_left - c * position,
                        blocks_left - c, fixed_k, n, lambda, out);
    }
    lambda[static_cast<std::size_t>(position - 1)] = 0;
}

} // namespace

std::vector<TypeVector> type_vectors(int n)
{
    if (n < 1)
        throw DomainError("type vectors need n >= 1");
    std::vector<TypeVector> out;
    std::vector<int> lambda(static_cast<std::size_t>(n), 0);
    enumerate_types(1, n, 0, false, n, lambda, out);
    return out;
}

std::vector<TypeVector> type_vectors(int n, int k)
{
    if (n < 1 || k < 1 || k > n)
        throw DomainError("type vectors need 1 <= k <= n");
    std::vector<TypeVector> out;
    std::vector<int> lambda(static_cast<std::size_t>(n), 0);
    enumerate_types(1, n, k, true, n, lambda, out);
    return out;
}

} // namespace fdb
