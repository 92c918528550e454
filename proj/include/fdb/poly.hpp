#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdb/exact.hpp"
#include "fdb/errors.hpp"

namespace fdb {

// Generator families. A carries the coordinates a_n (n >= 2, a_1 = 1 is
// eliminated), Delta the log-derivative coordinates d_n (n >= 1), X the
// abstract Bell-polynomial slots x_n, Pi the coloured generators.
enum class Family { A, Delta, X, Pi };

std::string_view family_name(Family f);
Family family_from_name(std::string_view name);

// Index of a coloured generator: component colour plus the colour-count
// vector. Weight-1 vectors never occur (those are identified with
// constants, mirroring a_1 = 1).
struct PiIndex {
    int colour = 1;
    std::vector<int> counts;

    int weight() const;

    friend bool operator==(const PiIndex&, const PiIndex&) = default;
    friend auto operator<=>(const PiIndex&, const PiIndex&) = default;
};

class Generator {
public:
    static Generator a(int n);     // n >= 2
    static Generator delta(int n); // n >= 1
    static Generator x(int n);     // n >= 1
    static Generator pi(int colour, std::vector<int> counts); // weight >= 2

    Family family() const { return family_; }
    int index() const;
    const PiIndex& pi_index() const;

    // Grading: #a_n = n-1, #d_n = n, #x_n = n, #Pi^r_nbar = |nbar|-1.
    int degree() const;

    std::string to_string() const;

    friend bool operator==(const Generator&, const Generator&) = default;
    friend std::strong_ordering operator<=>(const Generator&, const Generator&);

private:
    Generator(Family f, int index, PiIndex pi);

    Family family_;
    int index_;
    PiIndex pi_;
};

// Product of generator powers, all from one family; the empty monomial is
// the family-neutral unit. Factors are kept sorted by generator with
// positive exponents. The ordering is graded: by total degree, then
// within a degree the monomial with the larger generators first
// (a_4 before a_2*a_3 before a_2^3).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const Generator& g, int exponent = 1);
    explicit Monomial(std::vector<std::pair<Generator, int>> factors);

    bool is_unit() const { return factors_.empty(); }
    std::optional<Family> family() const;
    int degree() const;
    int total_exponent() const;
    const std::vector<std::pair<Generator, int>>& factors() const { return factors_; }

    Monomial operator*(const Monomial& rhs) const;

    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs);

private:
    void normalize();

    std::vector<std::pair<Generator, int>> factors_;
};

// Sparse polynomial over Rational in one generator family (constants are
// family-neutral). Terms are a canonical map, so equality is structural
// and iteration order is the print order.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int constant);
    Polynomial(const Int& constant);
    Polynomial(const Rational& constant);
    explicit Polynomial(const Generator& g);
    explicit Polynomial(const Monomial& m, const Rational& coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Family> family() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;
    int degree() const; // max term degree; 0 for constants and zero

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;
    Polynomial pow(int e) const;

    // Ring-morphism extension of the generator images. Throws DomainError
    // naming the generator when an image is missing.
    Polynomial substitute(const std::map<Generator, Polynomial>& images) const;

    Polynomial homogeneous_component(int d) const;

    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void add_term(const Monomial& m, const Rational& c);

    std::map<Monomial, Rational> terms_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(const Rational& c, Polynomial p);
Polynomial operator*(Polynomial p, const Rational& c);

// Element of F (x) F: canonical map from monomial pairs to coefficients.
class TensorElement {
public:
    TensorElement() = default;
    TensorElement(const Polynomial& left, const Polynomial& right);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Monomial, Monomial>, Rational>& terms() const
    {
        return terms_;
    }
    Rational coefficient(const Monomial& left, const Monomial& right) const;

    TensorElement& operator+=(const TensorElement& rhs);
    TensorElement& operator-=(const TensorElement& rhs);
    TensorElement& operator*=(const Rational& c);
    // Componentwise product (x(x)y)(u(x)v) = xu (x) yv, extended bilinearly.
    TensorElement operator*(const TensorElement& rhs) const;
    TensorElement pow(int e) const;

    TensorElement bidegree_component(int left_degree, int right_degree) const;
    TensorElement map_legs(const std::function<Polynomial(const Monomial&)>& left,
                           const std::function<Polynomial(const Monomial&)>& right) const;

    void add_term(const Monomial& left, const Monomial& right, const Rational& c);

    std::string to_string() const;

    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    std::map<std::pair<Monomial, Monomial>, Rational> terms_;
};

TensorElement operator+(TensorElement lhs, const TensorElement& rhs);
TensorElement operator-(TensorElement lhs, const TensorElement& rhs);
TensorElement operator*(const Rational& c, TensorElement t);

// Multiplication map m: sum of coeff * left * right.
Polynomial contract_multiply(const TensorElement& t);
// (counit (x) id) and (id (x) counit).
Polynomial counit_left(const TensorElement& t);
Polynomial counit_right(const TensorElement& t);

} // namespace fdb
