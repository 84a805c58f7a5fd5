#pragma once

// Type A_{n-1} combinatorics on the GL_n weight lattice Z^n (epsilon basis).
// Indices in the public API are 1-based to match the usual root notation
// alpha_{rs} = eps_r - eps_s; storage is 0-based.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qkoszul {

class Weight {
public:
    Weight() = default;
    explicit Weight(int n) : c_(static_cast<std::size_t>(n), 0) {}
    explicit Weight(std::vector<int> coords) : c_(std::move(coords)) {}

    static Weight epsilon(int n, int r);
    /// alpha_{rs} = eps_r - eps_s (any r != s).
    static Weight root(int n, int r, int s);
    static Weight simple_root(int n, int i) { return root(n, i, i + 1); }
    /// rho = (n-1, n-2, ..., 0).
    static Weight rho(int n);
    /// Parses "a,b,c" (whitespace tolerated).
    static Weight parse(const std::string& text);

    int n() const noexcept { return static_cast<int>(c_.size()); }
    int operator[](int r) const { return c_[static_cast<std::size_t>(r - 1)]; }
    int& operator[](int r) { return c_[static_cast<std::size_t>(r - 1)]; }
    const std::vector<int>& coords() const noexcept { return c_; }

    /// <lambda, alpha_{rs}^vee> = lambda_r - lambda_s.
    int pair_coroot(int r, int s) const { return (*this)[r] - (*this)[s]; }
    /// Standard form (lambda, mu) = sum lambda_r mu_r.
    friend int dot(const Weight& a, const Weight& b);
    bool is_dominant() const;
    bool is_zero() const;
    /// Sum of coordinates (the GL_n determinant degree).
    int total() const;

    Weight operator-() const;
    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int k, Weight a);

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    std::string to_string() const;

private:
    std::vector<int> c_;
};

/// Permutation of {1..n}; acts on weights by w(eps_r) = eps_{w(r)}.
class WeylElt {
public:
    WeylElt() = default;
    static WeylElt identity(int n);
    /// Simple reflection s_i swapping i and i+1.
    static WeylElt simple(int n, int i);
    /// One-line notation: images[r-1] = w(r).
    static WeylElt from_images(const std::vector<int>& images);
    /// Product s_{i_1} s_{i_2} ... of simple reflections.
    static WeylElt from_word(int n, const std::vector<int>& word);

    int n() const noexcept { return static_cast<int>(p_.size()); }
    int operator()(int r) const { return p_[static_cast<std::size_t>(r - 1)] + 1; }
    /// Inversion count.
    int length() const;
    WeylElt inverse() const;
    Weight apply(const Weight& lambda) const;
    /// A reduced word (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}.
    std::vector<int> reduced_word() const;

    /// (a * b)(r) = a(b(r)).
    friend WeylElt operator*(const WeylElt& a, const WeylElt& b);
    friend bool operator==(const WeylElt&, const WeylElt&) = default;
    friend auto operator<=>(const WeylElt&, const WeylElt&) = default;

    /// One-line notation, e.g. "[2,3,1]".
    std::string to_string() const;

private:
    std::vector<int> p_;  // 0-based images
};

/// All n! elements, in lexicographic order of one-line notation.
std::vector<WeylElt> weyl_group(int n);

/// w . lambda = w(lambda + rho) - rho. Throws PreconditionError on rank mismatch.
Weight dot_action(const WeylElt& w, const Weight& lambda);

struct DominantConjugate {
    WeylElt w;
    Weight mu;
};

/// nullopt when lambda + rho has a repeated coordinate (Singular); otherwise the
/// unique w with w . lambda dominant.
std::optional<DominantConjugate> dominant_conjugate(const Weight& lambda);

/// Set of positive roots alpha_{rs}, stored as sorted (r, s) pairs with r < s.
using RootSubset = std::vector<std::pair<int, int>>;

RootSubset positive_roots(int n);
/// lambda_X = -sum_{alpha in X} alpha.
Weight lambda_of(int n, const RootSubset& x);

struct KostantEntry {
    WeylElt w;
    RootSubset x;
};

/// All X in Delta^+ with W . lambda_X meeting the dominant chamber (necessarily
/// in {0}), each paired with its w. Also checks that every other X misses the
/// chamber and that X = {alpha > 0 : w alpha < 0}; throws std::logic_error if
/// either check fails. BoundExceeded for n > bound.
std::vector<KostantEntry> kostant_sets(int n, int bound = 5);

/// Coxeter number, computed as max <rho, alpha^vee> + 1 over positive roots.
int coxeter_number(int n);

}  // namespace qkoszul
