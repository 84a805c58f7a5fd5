#include "qkoszul/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qkoszul {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t degree) {
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

bool IntPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

std::size_t IntPoly::valuation() const {
    std::size_t k = 0;
    while (k < c_.size() && sgn(c_[k]) == 0) ++k;
    return k == c_.size() ? 0 : k;
}

IntPoly IntPoly::shifted_down(std::size_t k) const {
    if (k == 0 || c_.empty()) return *this;
    return IntPoly(std::vector<mpz_class>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
    if (k == 0 || c_.empty()) return *this;
    std::vector<mpz_class> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return IntPoly(std::move(v));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive() const {
    if (c_.empty()) return {};
    mpz_class g = content();
    if (sgn(c_.back()) < 0) g = -g;
    if (g == 1) return *this;
    return divexact(g);
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    std::vector<mpz_class> v(big);
    for (std::size_t i = 0; i < small.size(); ++i) v[i] += small[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const mpz_class& s) const {
    if (sgn(s) == 0) return {};
    IntPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

IntPoly IntPoly::divexact(const mpz_class& s) const {
    IntPoly r = *this;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
    return r;
}

IntPoly IntPoly::divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("IntPoly::divexact: division by zero");
    if (b.is_one()) return a;
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::logic_error("IntPoly::divexact: inexact");
    std::vector<mpz_class> r = a.c_;
    std::vector<mpz_class> q(r.size() - b.c_.size() + 1);
    const mpz_class& lb = b.c_.back();
    mpz_class t;
    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_class& top = r[k + b.c_.size() - 1];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            throw std::logic_error("IntPoly::divexact: inexact");
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    for (const auto& x : r)
        if (sgn(x) != 0) throw std::logic_error("IntPoly::divexact: inexact");
    return IntPoly(std::move(q));
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r = a.coeffs();
    const auto& bc = b.coeffs();
    const mpz_class& lb = bc.back();
    const std::size_t db = bc.size() - 1;
    while (!r.empty() && r.size() - 1 >= db) {
        mpz_class lr = r.back();
        // r = lb * r - lr * x^(deg r - db) * b
        for (auto& x : r) x *= lb;
        const std::size_t off = r.size() - 1 - db;
        for (std::size_t j = 0; j < bc.size(); ++j)
            mpz_submul(r[off + j].get_mpz_t(), lr.get_mpz_t(), bc[j].get_mpz_t());
        while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
        if (!r.empty()) {
            // Keep coefficients small; only the associate class matters here.
            IntPoly p(r);
            r = p.primitive().coeffs();
        }
    }
    return IntPoly(std::move(r));
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive().scaled(b.is_zero() ? mpz_class(0) : b.content());
    if (b.is_zero()) return a.primitive().scaled(a.content());
    mpz_class cg;
    {
        mpz_class ca = a.content(), cb = b.content();
        mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
    if (a.degree() == 0 || b.degree() == 0) return constant(cg);
    IntPoly x = a.primitive(), y = b.primitive();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_rem(x, y);
        x = std::move(y);
        y = r.primitive();
    }
    return x.primitive().scaled(cg);
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const mpq_class& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const mpq_class& c, std::size_t degree) {
    std::vector<mpq_class> v(degree + 1);
    v[degree] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::from_int(const IntPoly& p) {
    std::vector<mpq_class> v;
    v.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) v.emplace_back(x);
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    std::vector<mpq_class> v(big);
    for (std::size_t i = 0; i < small.size(); ++i) v[i] += small[i];
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(v));
}

RatPoly RatPoly::scaled(const mpq_class& s) const {
    if (sgn(s) == 0) return {};
    RatPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw std::domain_error("RatPoly::divmod: division by zero");
    std::vector<mpq_class> rem = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<mpq_class> quo(rem.size() >= b.c_.size() ? rem.size() - db : 0);
    const mpq_class inv_lead = 1 / b.c_.back();
    while (!rem.empty() && rem.size() - 1 >= db) {
        const std::size_t off = rem.size() - 1 - db;
        mpq_class f = rem.back() * inv_lead;
        quo[off] = f;
        for (std::size_t j = 0; j < b.c_.size(); ++j) rem[off + j] -= f * b.c_[j];
        rem.pop_back();
        while (!rem.empty() && sgn(rem.back()) == 0) rem.pop_back();
    }
    q = RatPoly(std::move(quo));
    r = RatPoly(std::move(rem));
}

RatPoly RatPoly::rem(const RatPoly& a, const RatPoly& b) {
    RatPoly q, r;
    divmod(a, b, q, r);
    return r;
}

RatPoly RatPoly::inverse_mod(const RatPoly& a, const RatPoly& m) {
    // Extended Euclid tracking only the coefficient of a.
    RatPoly r0 = m, r1 = rem(a, m);
    RatPoly t0, t1 = constant(1);
    while (!r1.is_zero()) {
        RatPoly q, r;
        divmod(r0, r1, q, r);
        RatPoly t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.degree() != 0) throw std::domain_error("RatPoly::inverse_mod: not invertible");
    return rem(t0.scaled(1 / r0.c_[0]), m);
}

// ---------------------------------------------------------------- cyclotomic

int euler_phi(int m) {
    int result = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

IntPoly cyclotomic_polynomial(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    // x^m - 1 = prod_{d | m} Phi_d(x)
    IntPoly p = IntPoly::monomial(1, static_cast<std::size_t>(m)) - IntPoly::constant(1);
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) p = IntPoly::divexact(p, cyclotomic_polynomial(d));
    }
    return p;
}

}  // namespace qkoszul
