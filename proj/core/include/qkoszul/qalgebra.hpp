#pragma once

// Graded pieces of U(n+) (letters e_i) and U(n-) (letters f_i) for type
// A_{n-1}, the Drinfeld pairing between them, and the dual map
// F : U(n-) -> U(n+)^*, <F(y), x> = tau(x, y).
//
// Degrees are given as elements beta of Q+ in epsilon coordinates; an F-piece
// "of degree beta" has weight -beta. Serre quotients are computed degree by
// degree with exact linear algebra.

#include "qkoszul/matrix.hpp"
#include "qkoszul/scalar.hpp"
#include "qkoszul/weights.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qkoszul {

enum class Alphabet { E, F };

/// Word in generator indices 1..n-1.
using Word = std::vector<int>;

/// Cartan matrix entry of type A.
inline int cartan(int i, int j) {
    if (i == j) return 2;
    return (i - j == 1 || j - i == 1) ? -1 : 0;
}

/// Sum of the simple roots of the letters (always in Q+).
Weight word_degree(int n, const Word& w);

/// Simple-root multiplicities (m_1..m_{n-1}) of beta in Q+; throws
/// PreconditionError if beta is not a non-negative root combination.
std::vector<int> simple_multiplicities(const Weight& beta);

class NCPoly {
public:
    NCPoly(int n, Alphabet alphabet, Field field);
    static NCPoly unit(int n, Alphabet alphabet, Field field);
    static NCPoly monomial(int n, Alphabet alphabet, Field field, Word w);

    int n() const noexcept { return n_; }
    Alphabet alphabet() const noexcept { return alphabet_; }
    Field field() const noexcept { return field_; }
    const std::map<Word, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Word& w, const Scalar& c);
    bool is_homogeneous() const;
    /// Common Q+ degree of all words; PreconditionError if inhomogeneous or zero.
    Weight degree() const;

    NCPoly& operator+=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a += b.scaled(-b.field_.one()); }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly scaled(const Scalar& s) const;
    friend bool operator==(const NCPoly& a, const NCPoly& b);

    /// e.g. "e1 e2 - (q + q^-1) e2 e1".
    std::string to_string() const;

private:
    void check_compatible(const NCPoly& o) const;

    int n_;
    Alphabet alphabet_;
    Field field_;
    std::map<Word, Scalar> terms_;
};

/// Quotient of the span of all words of degree beta by the Serre relations.
class GradedPiece {
public:
    int n() const;
    Alphabet alphabet() const;
    Field field() const;
    const Weight& beta() const;
    std::size_t dim() const;
    /// Representative words of a basis of the quotient (the non-pivot words).
    const std::vector<Word>& basis() const;
    /// Every word of degree beta.
    const std::vector<Word>& words() const;
    /// Rank of the Serre-consequence span inside the word space.
    std::size_t relation_rank() const;

    /// Coordinates of the class of a word (or element) in the basis.
    SparseVector coordinates(const Word& w) const;
    SparseVector coordinates(const NCPoly& p) const;
    /// True if the element lies in the Serre-relation span.
    bool is_relation(const NCPoly& p) const;

private:
    friend GradedPiece graded_basis(int, const Weight&, Alphabet, Field, int);
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Builds the graded piece of degree beta. BoundExceeded if |beta| > degree_bound;
/// PreconditionError in root-of-unity mode with ell < n, or if the quantum
/// integer [2] entering the Serre relations vanishes.
GradedPiece graded_basis(int n, const Weight& beta, Alphabet alphabet, Field field, int degree_bound = 6);

/// Number of multisets of positive roots with sum beta, by direct enumeration.
std::uint64_t kostant_partition_count(const Weight& beta);

/// Delta(e_w) = sum coeff * (e_left k_{deg right}) (x) e_right, over all ways of
/// splitting the letters of w into a left and right subsequence.
struct CoproductTerm {
    Word left;
    Word right;
    Scalar coeff;
};
std::vector<CoproductTerm> coproduct(const Word& x, Field field);

/// tau on words: x in the e-letters, y in the f-letters.
Scalar drinfeld_pairing(const Word& x, const Word& y, Field field);
/// tau on homogeneous elements; PreconditionError on inhomogeneous input.
Scalar drinfeld_pairing(const NCPoly& x, const NCPoly& y);

/// Gram matrix of tau on graded_basis(beta, E) x graded_basis(beta, F).
ScalarMatrix pairing_gram(int n, const Weight& beta, Field field, int degree_bound = 6);
std::size_t pairing_gram_rank(int n, const Weight& beta, Field field, int degree_bound = 6);

/// A linear functional on one graded piece of U(n+), stored by its values on the basis.
class Functional {
public:
    Functional(GradedPiece piece, std::vector<Scalar> values);
    const GradedPiece& piece() const noexcept { return piece_; }
    const std::vector<Scalar>& values() const noexcept { return values_; }
    Scalar operator()(const Word& w) const;
    friend bool operator==(const Functional& a, const Functional& b) { return a.values_ == b.values_; }

private:
    GradedPiece piece_;
    std::vector<Scalar> values_;
};

/// F(y) on graded_basis(deg y, E).
Functional dual_map_F(const NCPoly& y, int degree_bound = 6);

/// Product dual to Delta: <phi phi', x> = <phi (x) phi', Delta(x)>, with group-like
/// factors paired trivially from the left. The result lives on `target`.
Functional dual_product(const Functional& phi, const Functional& psi, const GradedPiece& target);

}  // namespace qkoszul
