#pragma once

// Exact linear algebra over Scalar: dense and sparse matrices, fraction-free
// rank, and an incremental reduced row-echelon basis for span/kernel work.

#include "qkoszul/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qkoszul {

/// Sparse vector: column index -> nonzero entry.
using SparseVector = std::map<int, Scalar>;

class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(std::size_t rows, std::size_t cols, Field field);
    static ScalarMatrix identity(std::size_t n, Field field);
    /// Builds from nested rows; all entries must share one mode.
    static ScalarMatrix from_rows(const std::vector<std::vector<Scalar>>& rows, Field field);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Field field() const noexcept { return field_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t matrix_rank(const ScalarMatrix& m);

/// Sparse matrix with rows stored as ordered maps. Used for graded linear maps.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols, Field field);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Field field() const noexcept { return field_; }

    /// Adds `value` to entry (i, j), pruning exact zeros.
    void add(std::size_t i, std::size_t j, const Scalar& value);
    Scalar get(std::size_t i, std::size_t j) const;
    const SparseVector& row(std::size_t i) const { return data_[i]; }
    std::size_t nonzeros() const;
    bool is_zero() const;

    ScalarMatrix to_dense() const;
    SparseMatrix transpose() const;
    /// Applies the matrix to a column vector.
    SparseVector apply(const SparseVector& v) const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    SparseMatrix scaled(const Scalar& s) const;
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    Field field_;
    std::vector<SparseVector> data_;
};

/// A linear map between finite-dimensional graded pieces.
using GradedMap = SparseMatrix;

/// Exact rank. Splits the matrix into independent blocks (connected components
/// of the row/column incidence graph) and runs Bareiss on each block.
std::size_t matrix_rank(const SparseMatrix& m);

/// Incremental reduced row-echelon form over sparse vectors.
///
/// Every stored row has a pivot entry equal to one, and no stored row has a
/// nonzero entry in another row's pivot column.
class Echelon {
public:
    enum class Pivot { Last, First };

    explicit Echelon(Field field, Pivot policy = Pivot::Last) : field_(field), policy_(policy) {}

    /// Adds v to the span. Returns false if v was already in the span.
    bool insert(SparseVector v);
    /// Residue of v after eliminating every pivot column.
    SparseVector reduce(SparseVector v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

    std::size_t rank() const noexcept { return rows_.size(); }
    bool is_pivot(int col) const { return pivot_row_.count(col) != 0; }
    /// Stored row whose pivot is `col`.
    const SparseVector& pivot_row(int col) const { return rows_.at(pivot_row_.at(col)); }
    const std::map<int, std::size_t>& pivots() const noexcept { return pivot_row_; }
    Field field() const noexcept { return field_; }

private:
    Field field_;
    Pivot policy_;
    std::vector<SparseVector> rows_;
    std::map<int, std::size_t> pivot_row_;
};

/// Basis of the right kernel {x : A x = 0}.
std::vector<SparseVector> nullspace(const SparseMatrix& a);

/// Solves A x = b. Returns nullopt if inconsistent. When the solution is not
/// unique, free variables are set to zero; `unique` (if given) reports it.
std::optional<SparseVector> solve(const SparseMatrix& a, const SparseVector& b,
                                  bool* unique = nullptr);

}  // namespace qkoszul
