#include "qkoszul/scalar.hpp"

#include "qkoszul/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qkoszul {

namespace {

constexpr int kModulusTableSize = 257;

// (exponent, coefficient) pairs, exponents strictly descending.
using LaurentTerms = std::vector<std::pair<int, mpq_class>>;

std::string format_terms(const LaurentTerms& terms, char var) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        mpq_class mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << var;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

LaurentTerms terms_of(const IntPoly& p, int shift) {
    LaurentTerms t;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (sgn(c[i]) != 0) t.emplace_back(static_cast<int>(i) + shift, mpq_class(c[i]));
    }
    return t;
}

bool needs_parens(const IntPoly& p) {
    int nonzero = 0;
    for (const auto& x : p.coeffs()) nonzero += sgn(x) != 0;
    return nonzero > 1;
}

RatPoly reduce_mod(const RatPoly& p, int order) {
    const RatPoly& m = cyclotomic_modulus(order);
    if (p.degree() < m.degree()) return p;
    return RatPoly::rem(p, m);
}

// z^k mod Phi_m for k in [0, m).
RatPoly power_of_z(int k, int order) {
    k %= order;
    if (k < 0) k += order;
    return reduce_mod(RatPoly::monomial(1, static_cast<std::size_t>(k)), order);
}

}  // namespace

// ---------------------------------------------------------------- RatFunc

RatFunc RatFunc::from_int(const mpz_class& c) {
    RatFunc r;
    r.num_ = IntPoly::constant(c);
    return r;
}

RatFunc RatFunc::from_rational(const mpq_class& c) {
    return make(IntPoly::constant(c.get_num()), IntPoly::constant(c.get_den()), 0);
}

RatFunc RatFunc::monomial(long long coeff, int exponent) {
    RatFunc r;
    if (coeff == 0) return r;
    r.num_ = IntPoly::constant(mpz_class(static_cast<long>(coeff)));
    r.shift_ = exponent;
    return r;
}

RatFunc RatFunc::make(IntPoly num, IntPoly den, int shift) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    RatFunc r;
    if (num.is_zero()) return r;
    const std::size_t vn = num.valuation(), vd = den.valuation();
    num = num.shifted_down(vn);
    den = den.shifted_down(vd);
    shift += static_cast<int>(vn) - static_cast<int>(vd);
    if (!den.is_one()) {
        IntPoly g = IntPoly::gcd(num, den);
        if (!g.is_one()) {
            num = IntPoly::divexact(num, g);
            den = IntPoly::divexact(den, g);
        }
        if (sgn(den.leading()) < 0) {
            num = -num;
            den = -den;
        }
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.shift_ = shift;
    return r;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int s = std::min(a.shift_, b.shift_);
    IntPoly an = a.num_.shifted_up(static_cast<std::size_t>(a.shift_ - s));
    IntPoly bn = b.num_.shifted_up(static_cast<std::size_t>(b.shift_ - s));
    if (a.den_ == b.den_) {
        if (a.den_.is_one()) {
            RatFunc r;
            IntPoly sum = an + bn;
            if (sum.is_zero()) return r;
            const std::size_t v = sum.valuation();
            r.num_ = sum.shifted_down(v);
            r.shift_ = s + static_cast<int>(v);
            return r;
        }
        return RatFunc::make(an + bn, a.den_, s);
    }
    return RatFunc::make(an * b.den_ + bn * a.den_, a.den_ * b.den_, s);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    RatFunc r;
    if (a.is_zero() || b.is_zero()) return r;
    r.shift_ = a.shift_ + b.shift_;
    if (a.den_.is_one() && b.den_.is_one()) {
        r.num_ = a.num_ * b.num_;
        return r;
    }
    IntPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_one()) {
        IntPoly g = IntPoly::gcd(an, bd);
        if (!g.is_one()) {
            an = IntPoly::divexact(an, g);
            bd = IntPoly::divexact(bd, g);
        }
    }
    if (!ad.is_one()) {
        IntPoly g = IntPoly::gcd(bn, ad);
        if (!g.is_one()) {
            bn = IntPoly::divexact(bn, g);
            ad = IntPoly::divexact(ad, g);
        }
    }
    r.num_ = an * bn;
    r.den_ = ad * bd;
    if (sgn(r.den_.leading()) < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.shift_ = -shift_;
    if (sgn(r.den_.leading()) < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

std::string RatFunc::to_string(char var) const {
    if (is_zero()) return "0";
    if (den_.is_one()) return format_terms(terms_of(num_, shift_), var);
    std::ostringstream os;
    std::string n = format_terms(terms_of(num_, shift_), var);
    std::string d = format_terms(terms_of(den_, 0), var);
    os << (needs_parens(num_) ? "(" + n + ")" : n) << '/'
       << (needs_parens(den_) || den_.degree() > 0 ? "(" + d + ")" : d);
    return os.str();
}

// ---------------------------------------------------------------- Field

Field Field::root_of_unity(int m) {
    if (m < 2) throw PreconditionError("root of unity order must be >= 2, got " + std::to_string(m));
    return Field(m);
}

int Field::ell() const noexcept {
    if (order_ == 0) return 0;
    return order_ % 2 == 1 ? order_ : order_ / 2;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long c) const {
    return from_rational(mpq_class(mpz_class(static_cast<long>(c))));
}

Scalar Field::from_rational(const mpq_class& c) const {
    if (order_ == 0) return Scalar::generic(RatFunc::from_rational(c));
    return Scalar::cyclotomic(order_, RatPoly::constant(c));
}

Scalar Field::zeta() const { return zeta_pow(1); }

Scalar Field::zeta_pow(int k) const {
    if (order_ == 0) return Scalar::generic(RatFunc::monomial(1, k));
    return Scalar::cyclotomic(order_, power_of_z(k, order_));
}

Scalar Field::quantum_integer(int r) const {
    if (r == 0) return zero();
    const int sign = r < 0 ? -1 : 1;
    const int a = r < 0 ? -r : r;
    if (order_ == 0) {
        // q^{1-a} * (1 + q^2 + ... + q^{2(a-1)})
        std::vector<mpz_class> c(static_cast<std::size_t>(2 * (a - 1) + 1));
        for (int i = 0; i < a; ++i) c[static_cast<std::size_t>(2 * i)] = sign;
        return Scalar::generic(RatFunc::make(IntPoly(std::move(c)), IntPoly::constant(1), 1 - a));
    }
    Scalar s = zero();
    for (int i = 0; i < a; ++i) s += zeta_pow(a - 1 - 2 * i);
    return sign < 0 ? -s : s;
}

std::string Field::describe() const {
    if (order_ == 0) return "generic";
    return "zeta-order " + std::to_string(order_) + " (ell=" + std::to_string(ell()) + ")";
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::generic(RatFunc v) {
    Scalar s;
    s.g_ = std::move(v);
    return s;
}

Scalar Scalar::cyclotomic(int order, const RatPoly& residue) {
    if (order < 2) throw PreconditionError("cyclotomic scalar needs order >= 2");
    Scalar s;
    s.order_ = order;
    s.r_ = reduce_mod(residue, order);
    return s;
}

Field Scalar::field() const { return order_ == 0 ? Field::generic() : Field::root_of_unity(order_); }

const RatFunc& Scalar::generic_value() const {
    if (order_ != 0) throw ModeMismatch("generic_value() on a root-of-unity scalar");
    return g_;
}

const RatPoly& Scalar::residue() const {
    if (order_ == 0) throw ModeMismatch("residue() on a generic scalar");
    return r_;
}

void Scalar::check_same_mode(const Scalar& o) const {
    if (order_ != o.order_) {
        throw ModeMismatch("scalar mode mismatch: " + field().describe() + " vs " +
                           o.field().describe());
    }
}

bool Scalar::is_zero() const { return order_ == 0 ? g_.is_zero() : r_.is_zero(); }

bool Scalar::is_one() const {
    if (order_ == 0) return g_.is_one();
    return r_.degree() == 0 && r_[0] == 1;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (order_ == 0) s.g_ = -s.g_;
    else s.r_ = -s.r_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_mode(o);
    if (order_ == 0) g_ = g_ + o.g_;
    else r_ = r_ + o.r_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_mode(o);
    if (order_ == 0) g_ = g_ - o.g_;
    else r_ = r_ - o.r_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_mode(o);
    if (order_ == 0) g_ = g_ * o.g_;
    else r_ = reduce_mod(r_ * o.r_, order_);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    Scalar s = *this;
    if (order_ == 0) s.g_ = g_.inverse();
    else s.r_ = RatPoly::inverse_mod(r_, cyclotomic_modulus(order_));
    return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_mode(o);
    return *this *= o.inverse();
}

Scalar Scalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar result = field().one();
    Scalar base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check_same_mode(b);
    return a.order_ == 0 ? a.g_ == b.g_ : a.r_ == b.r_;
}

std::size_t Scalar::hash() const {
    std::size_t h = std::hash<int>{}(order_);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    auto mix_mpz = [&mix](const mpz_class& z) {
        mix(static_cast<std::size_t>(mpz_get_si(z.get_mpz_t())));
        mix(mpz_size(z.get_mpz_t()));
    };
    if (order_ == 0) {
        mix(static_cast<std::size_t>(g_.shift()));
        for (const auto& c : g_.num().coeffs()) mix_mpz(c);
        for (const auto& c : g_.den().coeffs()) mix_mpz(c);
    } else {
        for (const auto& c : r_.coeffs()) {
            mix_mpz(c.get_num());
            mix_mpz(c.get_den());
        }
    }
    return h;
}

std::string Scalar::to_string() const {
    if (order_ == 0) return g_.to_string('q');
    if (r_.is_zero()) return "0";
    // Sparsest representative z^{-k} * (z^k * x mod Phi_m); ties go to the
    // smallest largest-|exponent|, then to the smallest k.
    LaurentTerms best;
    std::size_t best_count = 0;
    int best_spread = 0;
    for (int k = 0; k < order_; ++k) {
        RatPoly p = reduce_mod(r_ * power_of_z(k, order_), order_);
        LaurentTerms terms;
        int spread = 0;
        const auto& c = p.coeffs();
        for (std::size_t i = c.size(); i-- > 0;) {
            if (sgn(c[i]) == 0) continue;
            const int e = static_cast<int>(i) - k;
            terms.emplace_back(e, c[i]);
            spread = std::max(spread, std::abs(e));
        }
        if (k == 0 || terms.size() < best_count || (terms.size() == best_count && spread < best_spread)) {
            best = std::move(terms);
            best_count = best.size();
            best_spread = spread;
        }
    }
    return format_terms(best, 'z');
}

// ---------------------------------------------------------------- free functions

const RatPoly& cyclotomic_modulus(int order) {
    if (order < 1) throw PreconditionError("cyclotomic modulus order must be positive");
    static const std::vector<RatPoly> table = [] {
        std::vector<IntPoly> phi(kModulusTableSize);
        std::vector<RatPoly> out(kModulusTableSize);
        for (int m = 1; m < kModulusTableSize; ++m) {
            IntPoly p = IntPoly::monomial(1, static_cast<std::size_t>(m)) - IntPoly::constant(1);
            for (int d = 1; d < m; ++d)
                if (m % d == 0) p = IntPoly::divexact(p, phi[static_cast<std::size_t>(d)]);
            phi[static_cast<std::size_t>(m)] = p;
            out[static_cast<std::size_t>(m)] = RatPoly::from_int(p);
        }
        return out;
    }();
    if (order < kModulusTableSize) return table[static_cast<std::size_t>(order)];
    thread_local std::map<int, RatPoly> overflow;
    auto it = overflow.find(order);
    if (it == overflow.end())
        it = overflow.emplace(order, RatPoly::from_int(cyclotomic_polynomial(order))).first;
    return it->second;
}

RootOfUnity make_root_of_unity(int m) {
    Field f = Field::root_of_unity(m);
    return RootOfUnity{f.zeta(), f.ell(), f};
}

Scalar quantum_factorial(int m) {
    if (m < 0) throw PreconditionError("quantum_factorial: negative argument");
    Field f = Field::generic();
    Scalar r = f.one();
    for (int k = 1; k <= m; ++k) r *= f.quantum_integer(k);
    return r;
}

Scalar specialize(const Scalar& value, int order) {
    if (!value.is_generic()) throw ModeMismatch("specialize: input must be generic-mode");
    Field f = Field::root_of_unity(order);
    const RatFunc& v = value.generic_value();
    if (v.is_zero()) return f.zero();
    Scalar num = Scalar::cyclotomic(order, RatPoly::from_int(v.num()));
    Scalar den = Scalar::cyclotomic(order, RatPoly::from_int(v.den()));
    if (den.is_zero()) throw std::domain_error("specialize: denominator vanishes at zeta");
    return num / den * f.zeta_pow(v.shift());
}

namespace {

bool single_term(const std::string& s) {
    return s.find(" + ") == std::string::npos && s.find(" - ") == std::string::npos;
}

}  // namespace

std::string format_combination(const std::vector<std::pair<Scalar, std::string>>& terms) {
    std::string out;
    for (const auto& [c, mono] : terms) {
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool negative = cs.front() == '-';
        if (negative) cs = (-c).to_string();
        const bool first = out.empty();
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        if (mono.empty()) {
            out += (single_term(cs) || (first && !negative)) ? cs : "(" + cs + ")";
        } else if (cs == "1") {
            out += mono;
        } else {
            out += (single_term(cs) ? cs : "(" + cs + ")") + " " + mono;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace qkoszul
