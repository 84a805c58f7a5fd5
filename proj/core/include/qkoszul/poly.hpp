#pragma once

// Dense univariate polynomials used as building blocks for exact scalars.
//
// IntPoly  -- Z[x], used for numerators/denominators of generic-mode values.
// RatPoly  -- Q[x], used for residues modulo a cyclotomic polynomial.
//
// Coefficients are stored low degree first; the zero polynomial has no
// coefficients and every nonzero polynomial has a nonzero leading entry.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace qkoszul {

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly constant(const mpz_class& c);
    static IntPoly monomial(const mpz_class& c, std::size_t degree);

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const;
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }
    const mpz_class& leading() const { return c_.back(); }

    /// Largest k with x^k dividing this polynomial (0 for the zero polynomial).
    std::size_t valuation() const;
    /// Divides by x^k; requires k <= valuation().
    IntPoly shifted_down(std::size_t k) const;

    mpz_class content() const;
    /// Content removed and sign fixed so the leading coefficient is positive.
    IntPoly primitive() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly scaled(const mpz_class& s) const;
    /// Multiplies by x^k.
    IntPoly shifted_up(std::size_t k) const;

    /// Exact quotient; throws std::logic_error if b does not divide a over Z.
    static IntPoly divexact(const IntPoly& a, const IntPoly& b);
    /// Exact division of every coefficient by an integer.
    IntPoly divexact(const mpz_class& s) const;
    /// gcd in Z[x]: content gcd times primitive gcd, leading coefficient positive.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<mpz_class> c_;
};

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs);
    static RatPoly constant(const mpq_class& c);
    static RatPoly monomial(const mpq_class& c, std::size_t degree);
    static RatPoly from_int(const IntPoly& p);

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
    const mpq_class& operator[](std::size_t i) const { return c_[i]; }
    const mpq_class& leading() const { return c_.back(); }

    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly scaled(const mpq_class& s) const;

    /// Remainder of division by a nonzero polynomial.
    static RatPoly rem(const RatPoly& a, const RatPoly& b);
    /// Quotient and remainder.
    static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
    /// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
    static RatPoly inverse_mod(const RatPoly& a, const RatPoly& m);

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// The m-th cyclotomic polynomial (m >= 1), monic with integer coefficients.
IntPoly cyclotomic_polynomial(int m);

/// Euler's totient.
int euler_phi(int m);

}  // namespace qkoszul
