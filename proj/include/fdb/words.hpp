#pragma once

#include <map>
#include <string>
#include <vector>

#include "fdb/hopf.hpp"
#include "fdb/poly.hpp"

namespace fdb {

inline constexpr int kGammaCap = 10;
inline constexpr int kDualGradeCap = 10;

// Word over positive integers; the empty word is the unit.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);

// Element of the shuffle algebra H: canonical map Word -> Rational.
class WordElement {
public:
    WordElement() = default;
    static WordElement unit();
    static WordElement basis(Word w, const Rational& coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Rational>& terms() const { return terms_; }
    Rational coefficient(const Word& w) const;

    WordElement& operator+=(const WordElement& rhs);
    WordElement& operator-=(const WordElement& rhs);
    WordElement& operator*=(const Rational& c);

    void add_term(const Word& w, const Rational& c);

    std::string to_string() const;

    friend bool operator==(const WordElement&, const WordElement&) = default;

private:
    std::map<Word, Rational> terms_;
};

WordElement operator+(WordElement lhs, const WordElement& rhs);
WordElement operator-(WordElement lhs, const WordElement& rhs);
WordElement operator*(const Rational& c, WordElement e);

// Shuffle product: all interleavings with multiplicity.
WordElement shuffle_product(const Word& u, const Word& v);
WordElement shuffle_product(const WordElement& a, const WordElement& b);
WordElement shuffle_pow(const WordElement& a, int e);

// Element of H (x) H.
class WordTensor {
public:
    WordTensor() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Word, Word>, Rational>& terms() const { return terms_; }

    WordTensor& operator+=(const WordTensor& rhs);
    WordTensor& operator*=(const Rational& c);
    void add_term(const Word& left, const Word& right, const Rational& c);

    std::string to_string() const;

    friend bool operator==(const WordTensor&, const WordTensor&) = default;

private:
    std::map<std::pair<Word, Word>, Rational> terms_;
};

// Coproduct of the shuffle algebra: all prefix (x) suffix splits.
WordTensor deconcatenation(const Word& u);
WordTensor deconcatenation(const WordElement& e);

// Coproduct of the concatenation algebra U(A) on the basis X_nbar:
// the unshuffle sum sh^{nbar}_{u,v} X_u (x) X_v (each X_n primitive).
WordTensor concat_coproduct(const Word& u);

// Functional on F supported on the monomial dual basis up to a grade cap:
// the key (m_1 <= ... <= m_r) carries the value on a_{m_1}...a_{m_r}.
class DualFunctional {
public:
    DualFunctional(Family family, int grade_cap);

    // a'_n: dual to the generator a_n, kills products and 1.
    static DualFunctional a_prime(int n, int grade_cap = kDualGradeCap);
    // b'_n = (n+1)! a'_{n+1}.
    static DualFunctional b_prime(int n, int grade_cap = kDualGradeCap);

    Family family() const { return family_; }
    int grade_cap() const { return grade_cap_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    Rational value(std::vector<int> key) const;

    DualFunctional& operator+=(const DualFunctional& rhs);
    DualFunctional& operator-=(const DualFunctional& rhs);
    DualFunctional& operator*=(const Rational& c);
    void add_term(std::vector<int> key, const Rational& c);

    std::string to_string() const;

    friend bool operator==(const DualFunctional&, const DualFunctional&) = default;

private:
    Family family_;
    int grade_cap_;
    std::map<std::vector<int>, Rational> terms_;
};

DualFunctional operator+(DualFunctional lhs, const DualFunctional& rhs);
DualFunctional operator-(DualFunctional lhs, const DualFunctional& rhs);
DualFunctional operator*(const Rational& c, DualFunctional f);

// Evaluation <phi, p>, extended linearly over the terms of p.
Rational pair(const DualFunctional& phi, const Polynomial& p);

// Product by the duality recipe <phi psi, m> = <phi (x) psi, Delta m>,
// computed on every a-monomial up to the common grade cap.
DualFunctional dual_product(const DualFunctional& phi, const DualFunctional& psi);
// a'_n a'_m.
DualFunctional dual_product(int n, int m);
// phi psi - psi phi.
DualFunctional bracket(const DualFunctional& phi, const DualFunctional& psi);

// Gamma_n = n! sum_{nbar in N_n} C^nbar u^nbar with
// C^nbar = (n_r + 1) prod_{i=2}^{r} (n_i + ... + n_r).
WordElement gamma_closed(int n, int cap = kGammaCap);

// Gamma_n from the pairing recursion
// <delta_m, b'_{n_1}...b'_{n_r}> = C(m, n_1+1) (n_1+1)! <delta_{m-n_1}, b'_{n_2}...b'_{n_r}>,
// base <delta_m, b'_m> = (m+1)!. The step pairs the bilinear part of
// Delta delta_m against the primitive left leg b'_{n_1}, which kills
// every product and the unit, leaving a single surviving term.
WordElement gamma_recursive(int n, int cap = kGammaCap);

// Verifies deconcatenation(Gamma_n) = (rho^t (x) rho^t)(Delta delta_n),
// where rho^t sends delta_m to Gamma_m and products to shuffle products.
CheckReport check_hopf_embedding(int n);

// Bundled gamma suite: route equality up to `upto`, embedding up to
// min(upto, 7), plus the b' commutator relations.
CheckReport check_gamma_suite(int upto);

} // namespace fdb
