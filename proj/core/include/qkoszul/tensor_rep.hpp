#pragma once

// The vector representation V = span(v_1..v_n) of U(gl_n) and its tensor
// powers, acted on through the iterated coproduct
//   Delta(e_i) = e_i (x) 1 + k_i (x) e_i,
//   Delta(f_i) = f_i (x) k_i^-1 + 1 (x) f_i,
//   Delta(k)   = k (x) k.
// On V: e_i v_r = delta_{r,i+1} v_{r-1}, f_i v_r = delta_{r,i} v_{r+1},
// k_{eps_r^vee} v_s = zeta^{delta_rs} v_s, k_i = k_{alpha_i^vee}.

#include "qkoszul/matrix.hpp"
#include "qkoszul/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qkoszul {

struct Generator {
    enum class Kind { E, F, K };
    Kind kind = Kind::K;
    /// Simple root index for E/F; epsilon index r for K.
    int index = 1;
    /// +1 for k_{eps_r^vee}, -1 for its inverse; unused for E/F.
    int sign = 1;

    static Generator e(int i) { return {Kind::E, i, 1}; }
    static Generator f(int i) { return {Kind::F, i, 1}; }
    static Generator k(int r, int sign = 1) { return {Kind::K, r, sign}; }

    friend bool operator==(const Generator&, const Generator&) = default;
    /// "e1", "f2", "k3", "k3^-1".
    std::string to_string() const;
};

/// e_i, f_i (i < n) and k_{+-eps_r^vee} (r <= n).
std::vector<Generator> all_generators(int n);

/// Basis tensor v_{t_1} (x) ... (x) v_{t_d}, indices 1-based.
using Tensor = std::vector<int>;

/// g applied to a basis tensor through the iterated coproduct.
std::vector<std::pair<Tensor, Scalar>> apply_generator(const Generator& g, const Tensor& t, int n, Field field);

/// All n^d basis tensors in lexicographic order, and the index of one of them.
std::vector<Tensor> tensor_basis(int n, int d);
std::size_t tensor_index(const Tensor& t, int n);

/// Matrix of g on V^{(x) d} in the tensor_basis order.
SparseMatrix generator_matrix(const Generator& g, int n, int d, Field field);

}  // namespace qkoszul
