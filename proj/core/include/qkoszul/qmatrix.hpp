#pragma once

// Quantum matrix generators xi_{rs} (1 <= r, s <= n) and the triangular
// generators xt_{rs} (r < s) of the dual of U(n+).
//
// xi normal form: monomials non-decreasing in lexicographic order on (r, s).
// xt normal form: row blocks n-1, n-2, ..., 1, columns ascending within a row,
// i.e. non-decreasing in the key (-r, s).

#include "qkoszul/scalar.hpp"
#include "qkoszul/tensor_rep.hpp"
#include "qkoszul/weights.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qkoszul {

using XiLetter = std::pair<int, int>;
using XiMonomial = std::vector<XiLetter>;

/// Linear combination of xi-words (or xt-words when `tilde`).
class XiPoly {
public:
    XiPoly(Field field, bool tilde) : field_(field), tilde_(tilde) {}
    static XiPoly monomial(Field field, bool tilde, XiMonomial m, Scalar c);

    Field field() const noexcept { return field_; }
    bool tilde() const noexcept { return tilde_; }
    const std::map<XiMonomial, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const XiMonomial& m, const Scalar& c);
    XiPoly& operator+=(const XiPoly& o);
    friend XiPoly operator+(XiPoly a, const XiPoly& b) { return a += b; }
    friend XiPoly operator-(XiPoly a, const XiPoly& b) { return a += b.scaled(-b.field_.one()); }
    friend XiPoly operator*(const XiPoly& a, const XiPoly& b);
    XiPoly scaled(const Scalar& s) const;
    friend bool operator==(const XiPoly& a, const XiPoly& b);

    /// "x[1,1] x[2,2] - (q - q^-1) x[1,2] x[2,1]" (or "xt[..]").
    std::string to_string() const;

private:
    void check_compatible(const XiPoly& o) const;

    Field field_;
    bool tilde_;
    std::map<XiMonomial, Scalar> terms_;
};

/// Which descending pair a reduction step rewrites first.
enum class Strategy { Leftmost, Rightmost };

/// One rewrite of the adjacent pair (a, b); a must be strictly after b in the
/// relevant order. Returns the replacement terms (coefficient, letters).
std::vector<std::pair<Scalar, XiMonomial>> xi_rewrite_pair(const XiLetter& a, const XiLetter& b, Field field);
std::vector<std::pair<Scalar, XiMonomial>> tilde_rewrite_pair(const XiLetter& a, const XiLetter& b, Field field);

/// True if the pair (a, b) is out of order (a rewrite applies).
bool xi_descending(const XiLetter& a, const XiLetter& b);
bool tilde_descending(const XiLetter& a, const XiLetter& b);

XiPoly xi_normal_form(const XiPoly& p, Strategy strategy = Strategy::Leftmost);
XiPoly tilde_normal_form(const XiPoly& p, Strategy strategy = Strategy::Leftmost);

struct PbwCrosscheck {
    std::uint64_t count = 0;  // ordered xt-monomials of weight beta
    std::size_t dim = 0;      // dimension of the Serre quotient of degree beta
    std::size_t span = 0;     // rank of normal forms of all words in xt_{i,i+1} of weight beta
};

/// Counts ordered monomials of weight beta and compares against graded_basis.
/// `span` independently checks that the rewriting reaches every ordered monomial.
PbwCrosscheck pbw_count_crosscheck(int n, const Weight& beta, Field field, int degree_bound = 6);

/// <v*_{r_1} (x) ... (x) v*_{r_k}, u (v_{s_1} (x) ... (x) v_{s_k})> with u = u_1 u_2 ... u_m.
Scalar evaluate_on_tensor(const XiMonomial& word, const std::vector<Generator>& u, int n, Field field,
                          int tensor_bound = 4);
Scalar evaluate_on_tensor(const XiPoly& p, const std::vector<Generator>& u, int n, int tensor_bound = 4);

struct RelationViolation {
    std::string family;
    std::string relation;
    std::string witness;  // generator word u with <relation, u> != 0
};

struct RelationReport {
    int n = 0;
    std::size_t subalgebra_dim = 0;
    std::map<std::string, std::size_t> checked;  // family -> instances checked
    bool row_one_commutation = false;            // xi_{1r} xi_{1s} = z xi_{1s} xi_{1r}, r < s
    std::vector<RelationViolation> violations;
    bool ok() const { return violations.empty() && row_one_commutation; }
};

/// The four quadratic relation families of the xi_{rs} as functionals on
/// every operator of the subalgebra of End(V (x) V) generated by U.
std::vector<std::pair<std::string, XiPoly>> xi_relations(int n, Field field);
RelationReport verify_relations(int n, Field field);

}  // namespace qkoszul
