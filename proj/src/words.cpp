#include "fdb/words.hpp"

#include <algorithm>
#include <set>

#include "fdb/cm.hpp"

namespace fdb {

std::string word_to_string(const Word& w)
{
    if (w.empty())
        return "()";
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(w[i]);
    }
    return out + ")";
}

WordElement WordElement::unit()
{
    return basis({});
}

WordElement WordElement::basis(Word w, const Rational& coeff)
{
    WordElement e;
    e.add_term(std::move(w), coeff);
    return e;
}

Rational WordElement::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void WordElement::add_term(const Word& w, const Rational& c)
{
    if (c == 0)
        return;
    for (int letter : w)
        if (letter < 1)
            throw DomainError("word letters must be positive integers");
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

WordElement& WordElement::operator+=(const WordElement& rhs)
{
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, c);
    return *this;
}

WordElement& WordElement::operator-=(const WordElement& rhs)
{
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, -c);
    return *this;
}

WordElement& WordElement::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_)
        coeff *= c;
    return *this;
}

std::string WordElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        Rational abs = c < 0 ? Rational(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (w.empty()) {
            out += fdb::to_string(abs);
            continue;
        }
        if (abs != 1)
            out += fdb::to_string(abs) + "*";
        out += "u^" + word_to_string(w);
    }
    return out;
}

WordElement operator+(WordElement lhs, const WordElement& rhs)
{
    lhs += rhs;
    return lhs;
}

WordElement operator-(WordElement lhs, const WordElement& rhs)
{
    lhs -= rhs;
    return lhs;
}

WordElement operator*(const Rational& c, WordElement e)
{
    e *= c;
    return e;
}

namespace {

void shuffle_rec(const Word& u, std::size_t iu, const Word& v, std::size_t iv,
                 Word& prefix, WordElement& out)
{
    if (iu == u.size() && iv == v.size()) {
        out.add_term(prefix, 1);
        return;
    }
    if (iu < u.size()) {
        prefix.push_back(u[iu]);
        shuffle_rec(u, iu + 1, v, iv, prefix, out);
        prefix.pop_back();
    }
    if (iv < v.size()) {
        prefix.push_back(v[iv]);
        shuffle_rec(u, iu, v, iv + 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

WordElement shuffle_product(const Word& u, const Word& v)
{
    WordElement out;
    Word prefix;
    prefix.reserve(u.size() + v.size());
    shuffle_rec(u, 0, v, 0, prefix, out);
    return out;
}

WordElement shuffle_product(const WordElement& a, const WordElement& b)
{
    WordElement out;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) {
            WordElement sh = shuffle_product(u, v);
            sh *= cu * cv;
            out += sh;
        }
    return out;
}

WordElement shuffle_pow(const WordElement& a, int e)
{
    if (e < 0)
        throw DomainError("negative shuffle power");
    WordElement out = WordElement::unit();
    for (int i = 0; i < e; ++i)
        out = shuffle_product(out, a);
    return out;
}

void WordTensor::add_term(const Word& left, const Word& right, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(std::make_pair(left, right), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

WordTensor& WordTensor::operator+=(const WordTensor& rhs)
{
    for (const auto& [p, c] : rhs.terms_)
        add_term(p.first, p.second, c);
    return *this;
}

WordTensor& WordTensor::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, coeff] : terms_)
        coeff *= c;
    return *this;
}

std::string WordTensor::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
        if (!out.empty())
            out += " + ";
        out += fdb::to_string(c) + "*" + word_to_string(p.first) + " (x) " +
               word_to_string(p.second);
    }
    return out;
}

WordTensor deconcatenation(const Word& u)
{
    WordTensor out;
    for (std::size_t cut = 0; cut <= u.size(); ++cut)
        out.add_term(Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(cut)),
                     Word(u.begin() + static_cast<std::ptrdiff_t>(cut), u.end()), 1);
    return out;
}

WordTensor deconcatenation(const WordElement& e)
{
    WordTensor out;
    for (const auto& [w, c] : e.terms()) {
        WordTensor t = deconcatenation(w);
        t *= c;
        out += t;
    }
    return out;
}

WordTensor concat_coproduct(const Word& u)
{
    // Each X_n is primitive, so Delta X_nbar distributes the letters over
    // the two legs in all order-preserving ways.
    WordTensor out;
    std::size_t n = u.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Word left, right;
        for (std::size_t i = 0; i < n; ++i)
            ((mask >> i) & 1 ? left : right).push_back(u[i]);
        out.add_term(left, right, 1);
    }
    return out;
}

DualFunctional::DualFunctional(Family family, int grade_cap)
    : family_(family), grade_cap_(grade_cap)
{
    if (family_ != Family::A && family_ != Family::Delta)
        throw DomainError("dual functionals live on the a- or delta-family");
    if (grade_cap_ < 1)
        throw DomainError("dual functional grade cap must be >= 1");
}

namespace {

int a_key_degree(const std::vector<int>& key)
{
    int d = 0;
    for (int m : key)
        d += m - 1;
    return d;
}

int delta_key_degree(const std::vector<int>& key)
{
    int d = 0;
    for (int m : key)
        d += m;
    return d;
}

int key_degree(Family family, const std::vector<int>& key)
{
    return family == Family::A ? a_key_degree(key) : delta_key_degree(key);
}

std::vector<int> monomial_key(const Monomial& m)
{
    std::vector<int> key;
    for (const auto& [g, e] : m.factors())
        for (int i = 0; i < e; ++i)
            key.push_back(g.index());
    return key;
}

} // namespace

DualFunctional DualFunctional::a_prime(int n, int grade_cap)
{
    if (n < 2)
        throw DomainError("a'_n needs n >= 2");
    DualFunctional f(Family::A, std::max(grade_cap, n - 1));
    f.add_term({n}, 1);
    return f;
}

DualFunctional DualFunctional::b_prime(int n, int grade_cap)
{
    if (n < 1)
        throw DomainError("b'_n needs n >= 1");
    DualFunctional f(Family::A, std::max(grade_cap, n));
    f.add_term({n + 1}, Rational(factorial(n + 1)));
    return f;
}

Rational DualFunctional::value(std::vector<int> key) const
{
    std::sort(key.begin(), key.end());
    if (key_degree(family_, key) > grade_cap_)
        throw DomainError("dual functional truncated at grade " +
                          std::to_string(grade_cap_));
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void DualFunctional::add_term(std::vector<int> key, const Rational& c)
{
    std::sort(key.begin(), key.end());
    for (int m : key)
        if ((family_ == Family::A && m < 2) || (family_ == Family::Delta && m < 1))
            throw DomainError("bad dual basis index " + std::to_string(m));
    if (key_degree(family_, key) > grade_cap_)
        throw DomainError("dual basis key beyond grade cap " +
                          std::to_string(grade_cap_));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

DualFunctional& DualFunctional::operator+=(const DualFunctional& rhs)
{
    if (family_ != rhs.family_)
        throw FamilyMismatchError("cannot add dual functionals of different families");
    grade_cap_ = std::min(grade_cap_, rhs.grade_cap_);
    for (const auto& [k, c] : rhs.terms_)
        if (key_degree(family_, k) <= grade_cap_)
            add_term(k, c);
    return *this;
}

DualFunctional& DualFunctional::operator-=(const DualFunctional& rhs)
{
    DualFunctional neg = rhs;
    neg *= Rational(-1);
    return *this += neg;
}

DualFunctional& DualFunctional::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, coeff] : terms_)
        coeff *= c;
    return *this;
}

std::string DualFunctional::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string prefix = family_ == Family::A ? "a" : "d";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty())
            out += " + ";
        out += fdb::to_string(c) + "*(";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i)
                out += "*";
            out += prefix + "_" + std::to_string(k[i]);
        }
        out += ")'";
    }
    return out;
}

DualFunctional operator+(DualFunctional lhs, const DualFunctional& rhs)
{
    lhs += rhs;
    return lhs;
}

DualFunctional operator-(DualFunctional lhs, const DualFunctional& rhs)
{
    lhs -= rhs;
    return lhs;
}

DualFunctional operator*(const Rational& c, DualFunctional f)
{
    f *= c;
    return f;
}

Rational pair(const DualFunctional& phi, const Polynomial& p)
{
    if (auto f = p.family(); f && *f != phi.family())
        throw FamilyMismatchError("functional and polynomial families differ");
    Rational out = 0;
    for (const auto& [m, c] : p.terms())
        out += c * phi.value(monomial_key(m));
    return out;
}

DualFunctional dual_product(const DualFunctional& phi, const DualFunctional& psi)
{
    if (phi.family() != Family::A || psi.family() != Family::A)
        throw FamilyMismatchError("dual_product is computed over the a-family");
    int cap = std::min(phi.grade_cap(), psi.grade_cap());
    DualFunctional out(Family::A, cap);
    // <phi psi, 1> = phi(1) psi(1).
    out.add_term({}, phi.value({}) * psi.value({}));
    // The pairing respects the grading, so only degrees in the sumset of
    // the two supports can carry nonzero values.
    std::set<int> left_degrees, right_degrees, degrees;
    for (const auto& [k, c] : phi.terms())
        left_degrees.insert(a_key_degree(k));
    for (const auto& [k, c] : psi.terms())
        right_degrees.insert(a_key_degree(k));
    for (int dl : left_degrees)
        for (int dr : right_degrees)
            if (dl + dr >= 1 && dl + dr <= cap)
                degrees.insert(dl + dr);
    for (int d : degrees) {
        for (const Monomial& m : a_monomials_of_degree(d)) {
            Rational v = 0;
            for (const auto& [legs, c] : coproduct_poly(Polynomial(m)).terms())
                v += c * phi.value(monomial_key(legs.first)) *
                     psi.value(monomial_key(legs.second));
            out.add_term(monomial_key(m), v);
        }
    }
    return out;
}

DualFunctional dual_product(int n, int m)
{
    int cap = std::max(n + m - 2, kDualGradeCap);
    return dual_product(DualFunctional::a_prime(n, cap),
                        DualFunctional::a_prime(m, cap));
}

DualFunctional bracket(const DualFunctional& phi, const DualFunctional& psi)
{
    return dual_product(phi, psi) - dual_product(psi, phi);
}

namespace {

Rational gamma_coefficient_closed(const std::vector<int>& parts)
{
    // C^nbar = (n_r + 1) * prod_{i=2}^{r} (n_i + ... + n_r).
    Rational c{parts.back() + 1};
    int tail = 0;
    for (std::size_t i = parts.size(); i-- > 1;) {
        tail += parts[i]; // n_{i+1} + ... + n_r in 1-based terms
        c *= tail;
    }
    return c;
}

Rational delta_pairing(int m, const std::vector<int>& parts, std::size_t from)
{
    // <delta_m, b'_{n_from} ... b'_{n_r}>.
    if (from + 1 == parts.size())
        return m == parts[from] ? Rational(factorial(m + 1)) : Rational(0);
    int n1 = parts[from];
    Rational step = Rational(binomial(m, n1 + 1)) * Rational(factorial(n1 + 1));
    if (step == 0)
        return 0;
    return step * delta_pairing(m - n1, parts, from + 1);
}

} // namespace

WordElement gamma_closed(int n, int cap)
{
    if (n < 1)
        throw DomainError("gamma needs n >= 1");
    if (n > cap)
        throw ResourceLimitError("gamma capped at n <= " + std::to_string(cap));
    WordElement out;
    Rational n_fact{factorial(n)};
    for (const auto& nbar : compositions(n))
        out.add_term(nbar.parts(), n_fact * gamma_coefficient_closed(nbar.parts()));
    return out;
}

WordElement gamma_recursive(int n, int cap)
{
    if (n < 1)
        throw DomainError("gamma needs n >= 1");
    if (n > cap)
        throw ResourceLimitError("gamma capped at n <= " + std::to_string(cap));
    WordElement out;
    for (const auto& nbar : compositions(n))
        out.add_term(nbar.parts(), delta_pairing(n, nbar.parts(), 0));
    return out;
}

namespace {

WordElement rho_transpose(const Monomial& m, std::map<int, WordElement>& gammas)
{
    WordElement out = WordElement::unit();
    for (const auto& [g, e] : m.factors()) {
        auto it = gammas.find(g.index());
        if (it == gammas.end())
            it = gammas.emplace(g.index(), gamma_closed(g.index())).first;
        out = shuffle_product(out, shuffle_pow(it->second, e));
    }
    return out;
}

} // namespace

CheckReport check_hopf_embedding(int n)
{
    if (n < 1)
        throw DomainError("check_hopf_embedding needs n >= 1");
    if (n > 7)
        throw ResourceLimitError("embedding check capped at n <= 7");
    std::map<int, WordElement> gammas;
    WordTensor lhs = deconcatenation(gamma_closed(n));
    WordTensor rhs;
    for (const auto& [legs, c] : coproduct_delta(n).terms()) {
        WordElement left = rho_transpose(legs.first, gammas);
        WordElement right = rho_transpose(legs.second, gammas);
        for (const auto& [wl, cl] : left.terms())
            for (const auto& [wr, cr] : right.terms())
                rhs.add_term(wl, wr, c * cl * cr);
    }
    if (lhs == rhs)
        return {true, "deconcatenation(Gamma_" + std::to_string(n) +
                          ") matches (rho^t (x) rho^t) Delta delta_" +
                          std::to_string(n)};
    return {false, "embedding mismatch at n = " + std::to_string(n)};
}

CheckReport check_gamma_suite(int upto)
{
    if (upto < 1)
        throw DomainError("check_gamma_suite needs upto >= 1");
    for (int n = 1; n <= upto; ++n)
        if (gamma_closed(n, std::max(upto, kGammaCap)) !=
            gamma_recursive(n, std::max(upto, kGammaCap)))
            return {false, "gamma routes disagree at n = " + std::to_string(n)};
    for (int n = 1; n <= std::min(upto, 7); ++n)
        if (auto r = check_hopf_embedding(n); !r.ok)
            return r;
    int bmax = std::min(upto, 6);
    for (int n = 1; n <= bmax; ++n)
        for (int m = 1; m <= bmax; ++m) {
            int cap = n + m;
            DualFunctional lhs = bracket(DualFunctional::b_prime(n, cap),
                                         DualFunctional::b_prime(m, cap));
            DualFunctional rhs =
                Rational(m - n) * DualFunctional::b_prime(n + m, cap);
            if (lhs != rhs)
                return {false, "[b'_" + std::to_string(n) + ", b'_" +
                                   std::to_string(m) + "] != (m-n) b'_{n+m}"};
        }
    return {true, "gamma routes, embedding and b' commutators verified up to " +
                      std::to_string(upto)};
}

} // namespace fdb
