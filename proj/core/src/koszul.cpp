#include "qkoszul/koszul.hpp"

#include "qkoszul/errors.hpp"

#include <algorithm>
#include <map>

namespace qkoszul {

namespace {

int inversions(const Tensor& t) {
    int inv = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) inv += t[i] > t[j];
    return inv;
}

Scalar minus_zeta_pow(Field field, int k) {
    const Scalar z = field.zeta_pow(k);
    return k % 2 ? -z : z;
}

void check_n(int n) {
    if (n < 1) throw PreconditionError("n must be positive");
}

// Multisets of size k from 1..n, or subsets when strict.
void combinations(int n, int k, bool strict, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    const int lo = cur.empty() ? 1 : cur.back() + (strict ? 1 : 0);
    for (int r = lo; r <= n; ++r) {
        cur.push_back(r);
        combinations(n, k, strict, cur, out);
        cur.pop_back();
    }
}

// Image of a d-tensor in S^{d-p} (x) /\^p: coefficient and basis index.
std::optional<std::pair<Scalar, std::size_t>> project(const Tensor& t, const ChainBasis& basis, Field field) {
    const auto split = t.end() - basis.p();
    auto [cs, m] = sym_normal_form(Tensor(t.begin(), split), field);
    auto ext = ext_normal_form(Tensor(split, t.end()), field);
    if (!ext) return std::nullopt;
    return std::make_pair(cs * ext->first, basis.index(m, ext->second));
}

SparseVector act(const Generator& g, const Tensor& t, const ChainBasis& basis, Field field) {
    SparseVector out;
    for (const auto& [u, c] : apply_generator(g, t, basis.n(), field)) {
        auto img = project(u, basis, field);
        if (!img) continue;
        Scalar& slot = out.try_emplace(static_cast<int>(img->second), field.zero()).first->second;
        slot += c * img->first;
        if (slot.is_zero()) out.erase(static_cast<int>(img->second));
    }
    return out;
}

SparseVector scaled(const SparseVector& v, const Scalar& c) {
    SparseVector out;
    if (c.is_zero()) return out;
    for (const auto& [i, x] : v) out.emplace(i, x * c);
    return out;
}

}  // namespace

std::pair<Scalar, SymMonomial> sym_normal_form(const Tensor& t, Field field) {
    SymMonomial m = t;
    std::sort(m.begin(), m.end());
    return {field.zeta_pow(-inversions(t)), std::move(m)};
}

std::optional<std::pair<Scalar, ExtMonomial>> ext_normal_form(const Tensor& t, Field field) {
    ExtMonomial w = t;
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end()) return std::nullopt;
    return std::make_pair(minus_zeta_pow(field, inversions(t)), std::move(w));
}

std::pair<Scalar, SymMonomial> sym_product(const SymMonomial& a, const SymMonomial& b, Field field) {
    Tensor t = a;
    t.insert(t.end(), b.begin(), b.end());
    return sym_normal_form(t, field);
}

std::optional<std::pair<Scalar, ExtMonomial>> ext_product(const ExtMonomial& a, const ExtMonomial& b, Field field) {
    Tensor t = a;
    t.insert(t.end(), b.begin(), b.end());
    return ext_normal_form(t, field);
}

std::vector<SymMonomial> sym_basis(int n, int d) {
    check_n(n);
    std::vector<SymMonomial> out;
    if (d < 0) return out;
    std::vector<int> cur;
    combinations(n, d, false, cur, out);
    return out;
}

std::vector<ExtMonomial> ext_basis(int n, int p) {
    check_n(n);
    std::vector<ExtMonomial> out;
    if (p < 0 || p > n) return out;
    std::vector<int> cur;
    combinations(n, p, true, cur, out);
    return out;
}

ChainBasis::ChainBasis(int n, int d, int p) : n_(n), d_(d), p_(p) {
    check_n(n);
    if (p < 0 || d < 0) throw PreconditionError("negative degree");
    if (p > d) return;
    const auto ext = ext_basis(n, p);
    for (const auto& m : sym_basis(n, d - p))
        for (const auto& w : ext) elems_.emplace_back(m, w);
}

std::size_t ChainBasis::index(const SymMonomial& m, const ExtMonomial& w) const {
    const auto key = std::make_pair(m, w);
    const auto it = std::lower_bound(elems_.begin(), elems_.end(), key);
    if (it == elems_.end() || *it != key) throw PreconditionError("monomial not in this chain space");
    return static_cast<std::size_t>(it - elems_.begin());
}

GradedMap koszul_differential(int n, int d, int p, Field field) {
    if (p < 0 || p > n - 1) throw PreconditionError("koszul_differential: need 0 <= p <= n-1");
    const ChainBasis src(n, d, p + 1), dst(n, d, p);
    GradedMap out(dst.size(), src.size(), field);
    for (std::size_t col = 0; col < src.size(); ++col) {
        const auto& [m, w] = src[col];
        for (std::size_t a = 0; a < w.size(); ++a) {
            auto [c, mv] = sym_product(m, {w[a]}, field);
            ExtMonomial rest = w;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(a));
            out.add(dst.index(mv, rest), col, c * minus_zeta_pow(field, static_cast<int>(a)));
        }
    }
    return out;
}

GradedMap augmentation(int n, int d, Field field) {
    const ChainBasis src(n, d, 0);
    GradedMap out(1, src.size(), field);
    if (d == 0) out.add(0, 0, field.one());
    return out;
}

long StrandHomology::euler() const {
    long e = 0;
    for (std::size_t p = 0; p < dims.size(); ++p) e += (p % 2 ? -1L : 1L) * static_cast<long>(dims[p]);
    return e;
}

bool StrandHomology::exact() const {
    for (std::size_t p = 0; p < betti.size(); ++p)
        if (betti[p] != (d == 0 && p == 0 ? 1u : 0u)) return false;
    return true;
}

StrandHomology strand_homology(int n, int d, Field field) {
    check_n(n);
    if (d < 0) throw PreconditionError("strand_homology: negative degree");
    StrandHomology h;
    h.n = n;
    h.d = d;
    for (int p = 0; p <= n; ++p) h.dims.push_back(ChainBasis(n, d, p).size());
    for (int p = 0; p < n; ++p) h.ranks.push_back(h.dims[static_cast<std::size_t>(p) + 1] ? matrix_rank(koszul_differential(n, d, p, field)) : 0);
    for (std::size_t p = 0; p <= static_cast<std::size_t>(n); ++p) {
        const std::size_t out = p ? h.ranks[p - 1] : 0;
        const std::size_t in = p < static_cast<std::size_t>(n) ? h.ranks[p] : 0;
        h.betti.push_back(h.dims[p] - out - in);
    }
    return h;
}

GradedMap generator_action(const Generator& g, int n, int d, int p, Field field) {
    const ChainBasis basis(n, d, p);
    GradedMap out(basis.size(), basis.size(), field);
    std::vector<SparseVector> columns(basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& [m, w] = basis[col];
        Tensor t = m;
        t.insert(t.end(), w.begin(), w.end());
        columns[col] = act(g, t, basis, field);
        for (const auto& [row, c] : columns[col]) out.add(static_cast<std::size_t>(row), col, c);
    }
    if (p > d) return out;
    // Every tensor must act as c times its basis representative.
    for (const Tensor& t : tensor_basis(n, d)) {
        const auto img = project(t, basis, field);
        const SparseVector expected = img ? scaled(columns[img->second], img->first) : SparseVector{};
        if (act(g, t, basis, field) != expected)
            throw NotWellDefined("action of " + g.to_string() + " does not descend to S^" + std::to_string(d - p) +
                                 " (x) /\\^" + std::to_string(p));
    }
    return out;
}

EquivarianceReport equivariance_check(int n, int d, Field field) {
    EquivarianceReport report;
    report.n = n;
    report.d = d;
    const int top = std::min(n, d);
    for (const Generator& g : all_generators(n)) {
        std::vector<GradedMap> action;
        for (int p = 0; p <= top; ++p) action.push_back(generator_action(g, n, d, p, field));
        for (int p = 0; p < top; ++p) {
            const GradedMap dp = koszul_differential(n, d, p, field);
            ++report.checked;
            if (!(action[static_cast<std::size_t>(p)] * dp == dp * action[static_cast<std::size_t>(p) + 1]))
                report.failures.push_back({g.to_string(), "d_" + std::to_string(p)});
        }
        // K is the trivial module: e, f act by 0 and k by 1.
        const GradedMap eps = augmentation(n, d, field);
        const Scalar counit = g.kind == Generator::Kind::K ? field.one() : field.zero();
        ++report.checked;
        if (!(eps * action[0] == eps.scaled(counit))) report.failures.push_back({g.to_string(), "augmentation"});
    }
    for (int p = 1; p < top; ++p)
        if (!(koszul_differential(n, d, p - 1, field) * koszul_differential(n, d, p, field)).is_zero())
            report.square_zero = false;
    return report;
}

}  // namespace qkoszul
