#include "fdb/series.hpp"

#include "fdb/partitions.hpp"

namespace fdb {

ExpSeries::ExpSeries(int order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs))
{
    if (order < 1)
        throw DomainError("series order must be >= 1");
    if (static_cast<int>(coeffs_.size()) != order)
        throw DomainError("series of order " + std::to_string(order) + " needs " +
                          std::to_string(order) + " coefficients f_1..f_" +
                          std::to_string(order));
}

ExpSeries ExpSeries::identity(int order)
{
    std::vector<Rational> coeffs(static_cast<std::size_t>(order), Rational(0));
    coeffs[0] = 1;
    return ExpSeries(order, std::move(coeffs));
}

const Rational& ExpSeries::coeff(int n) const
{
    if (n < 1 || n > order())
        throw DomainError("series coefficient index " + std::to_string(n) +
                          " out of range 1.." + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(n - 1)];
}

std::string ExpSeries::to_string() const
{
    std::string out;
    for (int n = 1; n <= order(); ++n) {
        if (coeff(n) == 0)
            continue;
        if (!out.empty())
            out += " + ";
        out += fdb::to_string(coeff(n)) + "/" + std::to_string(n) + "!*t^" +
               std::to_string(n);
    }
    return out.empty() ? "0" : out;
}

ExpSeries compose(const ExpSeries& f, const ExpSeries& g)
{
    if (f.order() != g.order())
        throw OrderMismatchError("compose needs equal truncation orders, got " +
                                 std::to_string(f.order()) + " and " +
                                 std::to_string(g.order()));
    int N = f.order();
    std::vector<Rational> h(static_cast<std::size_t>(N), Rational(0));
    for (int n = 1; n <= N; ++n) {
        Rational hn = 0;
        for (int k = 1; k <= n; ++k)
            hn += f.coeff(k) * bell_partial(n, k, std::span<const Rational>(g.coeffs()));
        h[static_cast<std::size_t>(n - 1)] = hn;
    }
    return ExpSeries(N, std::move(h));
}

ExpSeries compose_oracle(const ExpSeries& f, const ExpSeries& g)
{
    if (f.order() != g.order())
        throw OrderMismatchError("compose needs equal truncation orders, got " +
                                 std::to_string(f.order()) + " and " +
                                 std::to_string(g.order()));
    int N = f.order();
    // Ordinary coefficients c[n] of t^n, index 0..N, truncated products.
    using Dense = std::vector<Rational>;
    auto mul = [N](const Dense& a, const Dense& b) {
        Dense out(static_cast<std::size_t>(N) + 1, Rational(0));
        for (int i = 0; i <= N; ++i)
            for (int j = 0; i + j <= N; ++j)
                out[static_cast<std::size_t>(i + j)] +=
                    a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        return out;
    };
    Dense gd(static_cast<std::size_t>(N) + 1, Rational(0));
    for (int n = 1; n <= N; ++n)
        gd[static_cast<std::size_t>(n)] = g.coeff(n) / Rational(factorial(n));
    Dense power(static_cast<std::size_t>(N) + 1, Rational(0));
    power[0] = 1;
    Dense acc(static_cast<std::size_t>(N) + 1, Rational(0));
    for (int k = 1; k <= N; ++k) {
        power = mul(power, gd);
        Rational fk = f.coeff(k) / Rational(factorial(k));
        for (int n = 0; n <= N; ++n)
            acc[static_cast<std::size_t>(n)] += fk * power[static_cast<std::size_t>(n)];
    }
    std::vector<Rational> h(static_cast<std::size_t>(N), Rational(0));
    for (int n = 1; n <= N; ++n)
        h[static_cast<std::size_t>(n - 1)] =
            acc[static_cast<std::size_t>(n)] * Rational(factorial(n));
    return ExpSeries(N, std::move(h));
}

ExpSeries revert(const ExpSeries& f)
{
    if (!f.is_unital())
        throw NotUnitalError("reversion needs f_1 = 1, got f_1 = " +
                             fdb::to_string(f.coeff(1)));
    int N = f.order();
    std::vector<Rational> g(static_cast<std::size_t>(N), Rational(0));
    g[0] = 1;
    // Arguments (0, f_2, f_3, ...): B_{n-1+k,k} only reads x_1..x_n.
    std::vector<Rational> args(static_cast<std::size_t>(2 * N), Rational(0));
    for (int m = 2; m <= N; ++m)
        args[static_cast<std::size_t>(m - 1)] = f.coeff(m);
    for (int n = 2; n <= N; ++n) {
        Rational gn = 0;
        for (int k = 1; k <= n - 1; ++k) {
            Rational term = bell_partial(n - 1 + k, k, std::span<const Rational>(args));
            gn += (k % 2 == 0) ? term : -term;
        }
        g[static_cast<std::size_t>(n - 1)] = gn;
    }
    return ExpSeries(N, std::move(g));
}

Rational majorant_bound(const Rational& A, const Rational& B, const Rational& C,
                        const Rational& D, int n)
{
    if (A <= 0 || B <= 0 || C <= 0 || D <= 0)
        throw DomainError("majorant_bound needs positive A, B, C, D");
    if (n < 1)
        throw DomainError("majorant_bound needs n >= 1");
    Rational E = A * C / (A + D);
    Rational F = B * D / (A + D);
    Rational Fn = 1;
    for (int i = 0; i < n; ++i)
        Fn *= F;
    return E * Rational(factorial(n)) / Fn;
}

} // namespace fdb
