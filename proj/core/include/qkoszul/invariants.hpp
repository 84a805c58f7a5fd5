#pragma once

// The group algebra K[Lambda] of the GL_n weight lattice, the twisted Weyl group
// action w o chi_l = z^{2 (rho, w l - l)} chi_{w l}, and the decomposition of twisted
// W_J-invariants (J = {2, ..., n-1}) over twisted W-invariants in the basis
// chi_{a eps_1}, a = 0..n-1.

#include "qkoszul/scalar.hpp"
#include "qkoszul/weights.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qkoszul {

/// sum c_l chi_l, zero coefficients pruned.
class GroupAlgebraElement {
public:
    GroupAlgebraElement(int n, Field field) : n_(n), field_(field) {}
    static GroupAlgebraElement chi(const Weight& lambda, Field field);
    static GroupAlgebraElement chi(const Weight& lambda, const Scalar& c);

    int n() const noexcept { return n_; }
    Field field() const noexcept { return field_; }
    const std::map<Weight, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Scalar coefficient(const Weight& lambda) const;

    void add_term(const Weight& lambda, const Scalar& c);
    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        return a += b.scaled(-b.field_.one());
    }
    /// chi_l chi_m = chi_{l+m}.
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    GroupAlgebraElement scaled(const Scalar& s) const;
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

    /// Largest |coordinate| in the support (0 for the zero element).
    int max_abs_coordinate() const;

    /// "chi[1,0] + z^-2 * chi[0,1]"; "0" when zero.
    std::string to_string() const;

private:
    void check_compatible(const GroupAlgebraElement& o) const;

    int n_;
    Field field_;
    std::map<Weight, Scalar> terms_;
};

enum class Twist { Twisted, Untwisted };

/// w o f, extended linearly. Untwisted drops the z-factor.
GroupAlgebraElement twisted_action(const WeylElt& w, const GroupAlgebraElement& f, Twist twist = Twist::Twisted);

/// Simple reflections generating a parabolic subgroup; {1..n-1} is all of W.
using Parabolic = std::vector<int>;
Parabolic full_weyl(int n);
/// J = {2, ..., n-1}: the permutations fixing 1.
Parabolic stabilizer_of_first(int n);

/// The invariant supported on the W_J-orbit of lambda, normalised to coefficient 1 at
/// lambda, found by solving s_i o f = f on the orbit; nullopt if only f = 0 solves it.
std::optional<GroupAlgebraElement> orbit_invariant_basis(const Weight& lambda, const Parabolic& j, Field field,
                                                         Twist twist = Twist::Twisted);

bool is_invariant(const GroupAlgebraElement& f, const Parabolic& j, Twist twist = Twist::Twisted);

struct Decomposition {
    std::vector<GroupAlgebraElement> f;  // f_0, ..., f_{n-1}
    int box = 0;
    std::size_t unknowns = 0;  // orbit-sum coefficients over all degrees
    std::size_t rank = 0;      // rank of the coefficient map; == unknowns certifies uniqueness
    bool unique() const { return rank == unknowns; }
};

/// g = sum_a f_a chi_{a eps_1} with each f_a W-invariant and supported in [-box, box]^n
/// (box <= 0 means n + 2). PreconditionError if g is not W_J-invariant, BoundExceeded if
/// the support of g leaves the box or the box is too small to solve.
Decomposition decompose(const GroupAlgebraElement& g, int box = 0, Twist twist = Twist::Twisted);

/// sum_a f_a chi_{a eps_1}.
GroupAlgebraElement recompose(const std::vector<GroupAlgebraElement>& f);

}  // namespace qkoszul
