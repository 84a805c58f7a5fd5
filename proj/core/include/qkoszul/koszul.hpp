#pragma once

// Quantum symmetric and exterior algebras on V and the Koszul complex
//   ... -> S^{d-p-1} V (x) /\^{p+1} V -> S^{d-p} V (x) /\^p V -> ... -> S^d V
// one total degree d at a time.
//
// S V    = T(V) / (v_r v_s - z v_s v_r, r < s)
// /\ V   = T(V) / (v_r v_r, v_r v_s + z^-1 v_s v_r, r < s)

#include "qkoszul/matrix.hpp"
#include "qkoszul/scalar.hpp"
#include "qkoszul/tensor_rep.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qkoszul {

/// Non-decreasing indices r_1 <= ... <= r_k.
using SymMonomial = std::vector<int>;
/// Strictly increasing indices r_1 < ... < r_p.
using ExtMonomial = std::vector<int>;

/// Image of the tensor v_{t_1} (x) ... (x) v_{t_k} in S V: z^{-inv(t)} times the sorted monomial.
std::pair<Scalar, SymMonomial> sym_normal_form(const Tensor& t, Field field);
/// Image in /\ V: zero on a repeated index, else (-z)^{inv(t)} times the sorted monomial.
std::optional<std::pair<Scalar, ExtMonomial>> ext_normal_form(const Tensor& t, Field field);

std::pair<Scalar, SymMonomial> sym_product(const SymMonomial& a, const SymMonomial& b, Field field);
std::optional<std::pair<Scalar, ExtMonomial>> ext_product(const ExtMonomial& a, const ExtMonomial& b, Field field);

std::vector<SymMonomial> sym_basis(int n, int d);
std::vector<ExtMonomial> ext_basis(int n, int p);

/// Basis of S^{d-p} V (x) /\^p V, sym factor major, both in lexicographic order.
class ChainBasis {
public:
    ChainBasis(int n, int d, int p);
    int n() const noexcept { return n_; }
    int d() const noexcept { return d_; }
    int p() const noexcept { return p_; }
    std::size_t size() const noexcept { return elems_.size(); }
    const std::pair<SymMonomial, ExtMonomial>& operator[](std::size_t i) const { return elems_[i]; }
    std::size_t index(const SymMonomial& m, const ExtMonomial& w) const;

private:
    int n_, d_, p_;
    std::vector<std::pair<SymMonomial, ExtMonomial>> elems_;
};

/// d_p : S^{d-p-1} (x) /\^{p+1} -> S^{d-p} (x) /\^p,
///   m (x) v_{r_1} ^ ... ^ v_{r_{p+1}} -> sum_a (-z)^{a-1} (m v_{r_a}) (x) (omit r_a).
/// Rows index the target basis.
GradedMap koszul_differential(int n, int d, int p, Field field);

/// S^d -> K: identity for d = 0, zero otherwise.
GradedMap augmentation(int n, int d, Field field);

struct StrandHomology {
    int n = 0;
    int d = 0;
    std::vector<std::size_t> dims;   // dim of S^{d-p} (x) /\^p, p = 0..n
    std::vector<std::size_t> ranks;  // rank of d_p, p = 0..n-1
    std::vector<std::size_t> betti;  // homology at p = 0..n (complex without K)
    long euler() const;
    bool exact() const;  // d >= 1: all zero; d = 0: only b_0 = 1
};

StrandHomology strand_homology(int n, int d, Field field);

/// Matrix of g on S^{d-p} (x) /\^p, computed on tensor representatives through the
/// iterated coproduct. Throws NotWellDefined if the result depends on the representative.
GradedMap generator_action(const Generator& g, int n, int d, int p, Field field);

struct EquivarianceFailure {
    std::string generator;
    std::string map;  // "d_p" or "augmentation"
};

struct EquivarianceReport {
    int n = 0;
    int d = 0;
    std::size_t checked = 0;
    bool square_zero = true;  // d_{p-1} d_p = 0 for all p
    std::vector<EquivarianceFailure> failures;
    bool ok() const { return square_zero && failures.empty(); }
};

/// M(g) d_p = d_p M(g) for all generators and p, the same for the augmentation,
/// and d_{p-1} d_p = 0.
EquivarianceReport equivariance_check(int n, int d, Field field);

}  // namespace qkoszul
