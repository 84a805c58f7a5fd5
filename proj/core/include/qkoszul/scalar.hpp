#pragma once

// Exact coefficients.
//
// A Scalar lives either in Q(q) ("generic" mode, q transcendental) or in the
// cyclotomic field Q(zeta) for a primitive m-th root of unity zeta
// ("root-of-unity" mode of order m). Generic values are reduced ratios of
// integer Laurent polynomials; root-of-unity values are residues modulo the
// m-th cyclotomic polynomial. Scalars of different modes never mix: doing so
// throws ModeMismatch.

#include "qkoszul/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qkoszul {

class Scalar;

/// Element of Q(q) in reduced form  q^shift * num(q) / den(q)  with
/// num(0) != 0, den(0) != 0, gcd(num, den) = 1 in Z[q], lc(den) > 0.
class RatFunc {
public:
    RatFunc() = default;  // zero
    static RatFunc from_int(const mpz_class& c);
    static RatFunc from_rational(const mpq_class& c);
    static RatFunc monomial(long long coeff, int exponent);
    static RatFunc make(IntPoly num, IntPoly den, int shift);

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    const IntPoly& num() const noexcept { return num_; }
    const IntPoly& den() const noexcept { return den_; }
    int shift() const noexcept { return shift_; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    RatFunc inverse() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(char var) const;

private:
    IntPoly num_;
    IntPoly den_ = IntPoly::constant(1);
    int shift_ = 0;
};

/// Coefficient domain descriptor. Cheap value type; `order() == 0` means generic.
class Field {
public:
    Field() = default;
    static Field generic() { return Field(0); }
    /// Root-of-unity mode; throws PreconditionError for m < 2.
    static Field root_of_unity(int m);

    bool is_generic() const noexcept { return order_ == 0; }
    int order() const noexcept { return order_; }
    /// Multiplicative order of zeta^2 (0 in generic mode).
    int ell() const noexcept;
    /// Printing variable: 'q' generic, 'z' at a root of unity.
    char variable() const noexcept { return order_ == 0 ? 'q' : 'z'; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long c) const;
    Scalar from_rational(const mpq_class& c) const;
    Scalar zeta() const;
    /// zeta^k for any integer k.
    Scalar zeta_pow(int k) const;
    /// [r] = (zeta^r - zeta^-r)/(zeta - zeta^-1), computed as the Laurent
    /// polynomial zeta^{r-1} + zeta^{r-3} + ... + zeta^{1-r} (valid for all r).
    Scalar quantum_integer(int r) const;

    friend bool operator==(Field a, Field b) { return a.order_ == b.order_; }
    friend bool operator!=(Field a, Field b) { return a.order_ != b.order_; }

    std::string describe() const;

private:
    explicit Field(int order) : order_(order) {}
    int order_ = 0;
};

class Scalar {
public:
    /// Generic-mode zero. Prefer Field::zero() so the mode is explicit.
    Scalar() = default;
    static Scalar generic(RatFunc v);
    /// Residue in Q[z]/Phi_m(z); reduces the given polynomial.
    static Scalar cyclotomic(int order, const RatPoly& residue);

    Field field() const;
    int order() const noexcept { return order_; }
    bool is_generic() const noexcept { return order_ == 0; }
    const RatFunc& generic_value() const;
    const RatPoly& residue() const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    /// Throws std::domain_error on zero.
    Scalar inverse() const;
    Scalar pow(int k) const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::size_t hash() const;

    /// Human/parser-readable form in the mode's variable ("q" or "z").
    /// Root-of-unity residues print as the sparsest Laurent representative.
    std::string to_string() const;

private:
    void check_same_mode(const Scalar& o) const;

    int order_ = 0;
    RatFunc g_;
    RatPoly r_;
};

/// Result of make_root_of_unity: the canonical generator and ell = ord(zeta^2).
struct RootOfUnity {
    Scalar zeta;
    int ell = 0;
    Field field;
};

/// Canonical primitive m-th root of unity; m < 2 is rejected.
RootOfUnity make_root_of_unity(int m);

/// prod_{r=1}^{m} (q^r - q^-r)/(q - q^-1) in generic mode; 1 for m = 0.
Scalar quantum_factorial(int m);

/// Ring homomorphism Q[q, q^-1]_(localized) -> Q(zeta_m), q -> zeta.
/// Throws std::domain_error if the denominator vanishes at zeta.
Scalar specialize(const Scalar& generic_value, int order);

/// Formats sum c_k * m_k as text, e.g. "x[1] - (q - q^-1) x[2]". An empty
/// monomial string stands for the unit. Zero coefficients are skipped; an empty
/// or all-zero list prints "0".
std::string format_combination(const std::vector<std::pair<Scalar, std::string>>& terms);

/// The cyclotomic polynomial used as modulus for the given order (cached table
/// for small orders, built once and immutable afterwards).
const RatPoly& cyclotomic_modulus(int order);

}  // namespace qkoszul

template <>
struct std::hash<qkoszul::Scalar> {
    std::size_t operator()(const qkoszul::Scalar& s) const { return s.hash(); }
};
