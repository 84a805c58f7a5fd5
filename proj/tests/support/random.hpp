#pragma once

// Random inputs and a modular-image oracle shared by the unit tests.

#include "qkoszul/matrix.hpp"
#include "qkoszul/scalar.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace qkoszul::testing {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Random Laurent polynomial with small coefficients and exponents in [-3, 3].
inline Scalar random_laurent(Rng& rng, Field f, int terms = 3) {
    Scalar s = f.zero();
    for (int k = 0; k < terms; ++k)
        s += f.from_int(uniform(rng, -4, 4)) * f.zeta_pow(static_cast<int>(uniform(rng, -3, 3)));
    return s;
}

/// Random element, occasionally a genuine fraction.
inline Scalar random_scalar(Rng& rng, Field f) {
    Scalar num = random_laurent(rng, f);
    if (uniform(rng, 0, 2) != 0) return num;
    Scalar den = random_laurent(rng, f, 2);
    if (den.is_zero()) return num;
    return num / den;
}

inline Scalar random_nonzero(Rng& rng, Field f) {
    for (;;) {
        Scalar s = random_scalar(rng, f);
        if (!s.is_zero()) return s;
    }
}

// ------------------------------------------------------------ modular image

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t mpz_mod(const mpz_class& x, std::uint64_t p) {
    mpz_class r;
    mpz_class pp(static_cast<unsigned long>(p));
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t());
    return r.get_ui();
}

/// Reduction Q(q) -> F_p (q -> t) or Q(zeta_m) -> F_p (zeta -> a primitive m-th
/// root of unity mod p). Images are undefined when a denominator vanishes.
class ModularImage {
public:
    ModularImage(Field f, std::uint64_t seed) : field_(f) {
        Rng rng(seed);
        const std::uint64_t m = f.is_generic() ? 1 : static_cast<std::uint64_t>(f.order());
        // Prime p = 1 mod m just below 2^31.
        p_ = (std::uint64_t{1} << 31) - 1;
        while (p_ % m != 1 % m || !is_prime(p_)) --p_;
        if (f.is_generic()) {
            point_ = 2 + static_cast<std::uint64_t>(uniform(rng, 0, static_cast<long long>(p_) - 3));
        } else {
            for (std::uint64_t g = 2;; ++g) {
                const std::uint64_t c = powmod(g, (p_ - 1) / m, p_);
                if (is_primitive(c, m)) {
                    point_ = c;
                    break;
                }
            }
        }
    }

    std::uint64_t prime() const { return p_; }

    std::optional<std::uint64_t> operator()(const Scalar& s) const {
        if (s.is_generic()) {
            const RatFunc& v = s.generic_value();
            if (v.is_zero()) return 0;
            const std::uint64_t num = eval_int(v.num());
            const std::uint64_t den = eval_int(v.den());
            if (den == 0) return std::nullopt;
            std::uint64_t x = mulmod(num, powmod(den, p_ - 2, p_), p_);
            const int sh = v.shift();
            const std::uint64_t t = sh >= 0 ? point_ : powmod(point_, p_ - 2, p_);
            return mulmod(x, powmod(t, static_cast<std::uint64_t>(sh >= 0 ? sh : -sh), p_), p_);
        }
        std::uint64_t acc = 0, pw = 1;
        for (const auto& c : s.residue().coeffs()) {
            const std::uint64_t den = mpz_mod(c.get_den(), p_);
            if (den == 0) return std::nullopt;
            const std::uint64_t term = mulmod(mpz_mod(c.get_num(), p_), powmod(den, p_ - 2, p_), p_);
            acc = (acc + mulmod(term, pw, p_)) % p_;
            pw = mulmod(pw, point_, p_);
        }
        return acc;
    }

    /// Rank of the modular image, or nullopt if some entry is undefined.
    std::optional<std::size_t> rank(const ScalarMatrix& m) const {
        std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                auto v = (*this)(m(i, j));
                if (!v) return std::nullopt;
                a[i][j] = *v;
            }
        std::size_t rank = 0;
        for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
            std::size_t piv = rank;
            while (piv < m.rows() && a[piv][col] == 0) ++piv;
            if (piv == m.rows()) continue;
            std::swap(a[piv], a[rank]);
            const std::uint64_t inv = powmod(a[rank][col], p_ - 2, p_);
            for (std::size_t i = rank + 1; i < m.rows(); ++i) {
                const std::uint64_t f = mulmod(a[i][col], inv, p_);
                for (std::size_t j = col; j < m.cols(); ++j)
                    a[i][j] = (a[i][j] + p_ - mulmod(f, a[rank][j], p_)) % p_;
            }
            ++rank;
        }
        return rank;
    }

private:
    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    bool is_primitive(std::uint64_t c, std::uint64_t m) const {
        if (powmod(c, m, p_) != 1) return false;
        for (std::uint64_t d = 1; d < m; ++d)
            if (m % d == 0 && powmod(c, d, p_) == 1) return false;
        return true;
    }

    std::uint64_t eval_int(const IntPoly& poly) const {
        std::uint64_t acc = 0;
        const auto& c = poly.coeffs();
        for (std::size_t i = c.size(); i-- > 0;) acc = (mulmod(acc, point_, p_) + mpz_mod(c[i], p_)) % p_;
        return acc;
    }

    Field field_;
    std::uint64_t p_ = 0;
    std::uint64_t point_ = 0;
};

}  // namespace qkoszul::testing
