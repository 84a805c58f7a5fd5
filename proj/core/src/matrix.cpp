#include "qkoszul/matrix.hpp"

#include "qkoszul/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qkoszul {

// ---------------------------------------------------------------- dense

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

ScalarMatrix ScalarMatrix::identity(std::size_t n, Field field) {
    ScalarMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

ScalarMatrix ScalarMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Field field) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    ScalarMatrix m(rows.size(), c, field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw PreconditionError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j].order() != field.order())
                throw ModeMismatch("matrix entry mode differs from matrix field");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product dimension mismatch");
    ScalarMatrix c(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
        }
    return c;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// In-place Bareiss elimination; returns the rank.
std::size_t bareiss_rank(std::vector<std::vector<Scalar>>& m, Field field) {
    const std::size_t r = m.size();
    if (r == 0) return 0;
    const std::size_t c = m.front().size();
    std::size_t rank = 0;
    Scalar prev = field.one();
    for (std::size_t col = 0; col < c && rank < r; ++col) {
        std::size_t p = rank;
        while (p < r && m[p][col].is_zero()) ++p;
        if (p == r) continue;
        std::swap(m[p], m[rank]);
        const Scalar& piv = m[rank][col];
        for (std::size_t i = rank + 1; i < r; ++i) {
            const Scalar lead = m[i][col];
            for (std::size_t j = col + 1; j < c; ++j) {
                Scalar v = piv * m[i][j];
                if (!lead.is_zero() && !m[rank][j].is_zero()) v -= lead * m[rank][j];
                if (!prev.is_one() && !v.is_zero()) v /= prev;
                m[i][j] = std::move(v);
            }
            m[i][col] = field.zero();
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t matrix_rank(const ScalarMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    std::vector<std::vector<Scalar>> m(a.rows(), std::vector<Scalar>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
    return bareiss_rank(m, a.field());
}

// ---------------------------------------------------------------- sparse

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows) {}

void SparseMatrix::add(std::size_t i, std::size_t j, const Scalar& value) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("SparseMatrix::add index");
    if (value.is_zero()) return;
    auto& row = data_[i];
    auto it = row.find(static_cast<int>(j));
    if (it == row.end()) {
        row.emplace(static_cast<int>(j), value);
        return;
    }
    it->second += value;
    if (it->second.is_zero()) row.erase(it);
}

Scalar SparseMatrix::get(std::size_t i, std::size_t j) const {
    auto it = data_[i].find(static_cast<int>(j));
    return it == data_[i].end() ? field_.zero() : it->second;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& r) { return r.empty(); });
}

ScalarMatrix SparseMatrix::to_dense() const {
    ScalarMatrix m(rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) m(i, static_cast<std::size_t>(j)) = v;
    return m;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) t.data_[static_cast<std::size_t>(j)].emplace(static_cast<int>(i), v);
    return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    SparseVector out;
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc = field_.zero();
        bool any = false;
        for (const auto& [j, a] : data_[i]) {
            auto it = v.find(j);
            if (it == v.end()) continue;
            acc += a * it->second;
            any = true;
        }
        if (any && !acc.is_zero()) out.emplace(static_cast<int>(i), std::move(acc));
    }
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("sparse product dimension mismatch");
    SparseMatrix c(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        SparseVector acc;
        for (const auto& [k, x] : a.data_[i]) {
            for (const auto& [j, y] : b.data_[static_cast<std::size_t>(k)]) {
                auto it = acc.find(j);
                if (it == acc.end()) acc.emplace(j, x * y);
                else it->second += x * y;
            }
        }
        for (auto it = acc.begin(); it != acc.end();) {
            if (it->second.is_zero()) it = acc.erase(it);
            else ++it;
        }
        c.data_[i] = std::move(acc);
    }
    return c;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("sparse sum dimension mismatch");
    SparseMatrix c = a;
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (const auto& [j, v] : b.data_[i]) c.add(i, static_cast<std::size_t>(j), v);
    return c;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + b.scaled(-b.field_.one()); }

SparseMatrix SparseMatrix::scaled(const Scalar& s) const {
    SparseMatrix c(rows_, cols_, field_);
    if (s.is_zero()) return c;
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) c.data_[i].emplace(j, v * s);
    return c;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::size_t matrix_rank(const SparseMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    if (r == 0 || c == 0) return 0;
    DisjointSets sets(r + c);
    for (std::size_t i = 0; i < r; ++i)
        for (const auto& [j, v] : m.row(i)) sets.unite(i, r + static_cast<std::size_t>(j));
    std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
    for (std::size_t i = 0; i < r; ++i)
        if (!m.row(i).empty()) blocks[sets.find(i)].first.push_back(i);
    for (std::size_t j = 0; j < c; ++j) blocks[sets.find(r + j)].second.push_back(j);
    std::size_t rank = 0;
    for (auto& [root, block] : blocks) {
        auto& [rows, cols] = block;
        if (rows.empty() || cols.empty()) continue;
        std::map<int, std::size_t> col_index;
        for (std::size_t k = 0; k < cols.size(); ++k) col_index[static_cast<int>(cols[k])] = k;
        std::vector<std::vector<Scalar>> dense(rows.size(), std::vector<Scalar>(cols.size(), m.field().zero()));
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (const auto& [j, v] : m.row(rows[a])) dense[a][col_index.at(j)] = v;
        rank += bareiss_rank(dense, m.field());
    }
    return rank;
}

// ---------------------------------------------------------------- echelon

SparseVector Echelon::reduce(SparseVector v) const {
    std::vector<int> hits;
    for (const auto& [col, x] : v)
        if (pivot_row_.count(col)) hits.push_back(col);
    for (int p : hits) {
        auto it = v.find(p);
        if (it == v.end()) continue;
        const Scalar factor = it->second;
        for (const auto& [col, x] : rows_[pivot_row_.at(p)]) {
            auto jt = v.find(col);
            if (jt == v.end()) {
                v.emplace(col, -(factor * x));
            } else {
                jt->second -= factor * x;
                if (jt->second.is_zero()) v.erase(jt);
            }
        }
    }
    return v;
}

bool Echelon::insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const int p = policy_ == Pivot::Last ? v.rbegin()->first : v.begin()->first;
    const Scalar inv = v.at(p).inverse();
    for (auto& [col, x] : v) x *= inv;
    for (auto& row : rows_) {
        auto it = row.find(p);
        if (it == row.end()) continue;
        const Scalar factor = it->second;
        for (const auto& [col, x] : v) {
            auto jt = row.find(col);
            if (jt == row.end()) {
                row.emplace(col, -(factor * x));
            } else {
                jt->second -= factor * x;
                if (jt->second.is_zero()) row.erase(jt);
            }
        }
    }
    pivot_row_.emplace(p, rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

std::vector<SparseVector> nullspace(const SparseMatrix& a) {
    Echelon e(a.field(), Echelon::Pivot::First);
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (!a.row(i).empty()) e.insert(a.row(i));
    std::vector<SparseVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        const int free = static_cast<int>(f);
        if (e.is_pivot(free)) continue;
        SparseVector x;
        x.emplace(free, a.field().one());
        for (const auto& [p, idx] : e.pivots()) {
            const auto& row = e.pivot_row(p);
            auto it = row.find(free);
            if (it != row.end()) x.emplace(p, -it->second);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<SparseVector> solve(const SparseMatrix& a, const SparseVector& b, bool* unique) {
    for (const auto& [i, v] : b)
        if (static_cast<std::size_t>(i) >= a.rows() && !v.is_zero()) return std::nullopt;
    // Forward elimination only, sparse rows first, pivoting on the column with the
    // fewest entries; full reduction fills in badly on large sparse systems.
    const int aug = static_cast<int>(a.cols());
    std::vector<std::size_t> col_count(a.cols(), 0);
    std::vector<SparseVector> pending;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        SparseVector row = a.row(i);
        for (const auto& [j, v] : row) ++col_count[static_cast<std::size_t>(j)];
        auto it = b.find(static_cast<int>(i));
        if (it != b.end() && !it->second.is_zero()) row.emplace(aug, it->second);
        if (!row.empty()) pending.push_back(std::move(row));
    }
    std::stable_sort(pending.begin(), pending.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });

    // Row k has no entry in the pivot columns of rows 0..k-1.
    std::vector<std::pair<int, SparseVector>> rows;
    std::vector<char> is_pivot(a.cols(), 0);
    for (SparseVector& v : pending) {
        for (const auto& [p, row] : rows) {
            auto it = v.find(p);
            if (it == v.end()) continue;
            const Scalar factor = it->second / row.at(p);
            for (const auto& [col, x] : row) {
                auto jt = v.find(col);
                if (jt == v.end()) {
                    v.emplace(col, -(factor * x));
                } else {
                    jt->second -= factor * x;
                    if (jt->second.is_zero()) v.erase(jt);
                }
            }
        }
        if (v.empty()) continue;
        int pivot = -1;
        for (const auto& [col, x] : v)
            if (col != aug && (pivot < 0 || col_count[static_cast<std::size_t>(col)] <
                                                col_count[static_cast<std::size_t>(pivot)]))
                pivot = col;
        if (pivot < 0) return std::nullopt;
        is_pivot[static_cast<std::size_t>(pivot)] = 1;
        rows.emplace_back(pivot, std::move(v));
    }
    if (unique) *unique = rows.size() == a.cols();

    // Other entries of row k are free columns (zero) or pivots of later rows.
    SparseVector x;
    for (auto r = rows.rbegin(); r != rows.rend(); ++r) {
        const auto& [p, row] = *r;
        Scalar acc = a.field().zero();
        for (const auto& [col, c] : row) {
            if (col == aug) {
                acc += c;
            } else if (col != p) {
                auto it = x.find(col);
                if (it != x.end()) acc -= c * it->second;
            }
        }
        if (!acc.is_zero()) x.emplace(p, acc / row.at(p));
    }
    return x;
}

}  // namespace qkoszul
