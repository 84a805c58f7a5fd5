#include "qkoszul/qmatrix.hpp"

#include "qkoszul/errors.hpp"
#include "qkoszul/qalgebra.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace qkoszul {

// ---------------------------------------------------------------- XiPoly

XiPoly XiPoly::monomial(Field field, bool tilde, XiMonomial m, Scalar c) {
    XiPoly p(field, tilde);
    p.add_term(m, c);
    return p;
}

void XiPoly::add_term(const XiMonomial& m, const Scalar& c) {
    for (const auto& [r, s] : m) {
        if (r < 1 || s < 1) throw PreconditionError("xi index must be positive");
        if (tilde_ && r >= s) throw PreconditionError("xt[r,s] requires r < s");
    }
    if (c.is_zero()) return;
    if (c.order() != field_.order()) throw ModeMismatch("XiPoly coefficient mode differs from its field");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void XiPoly::check_compatible(const XiPoly& o) const {
    if (tilde_ != o.tilde_) throw PreconditionError("cannot combine x[..] and xt[..] expressions");
    if (field_ != o.field_) throw ModeMismatch("XiPoly operands in different modes");
}

XiPoly& XiPoly::operator+=(const XiPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

XiPoly operator*(const XiPoly& a, const XiPoly& b) {
    a.check_compatible(b);
    XiPoly out(a.field_, a.tilde_);
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_) {
            XiMonomial w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add_term(w, c * d);
        }
    return out;
}

XiPoly XiPoly::scaled(const Scalar& s) const {
    XiPoly out(field_, tilde_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    return out;
}

bool operator==(const XiPoly& a, const XiPoly& b) {
    return a.tilde_ == b.tilde_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

std::string XiPoly::to_string() const {
    const std::string head = tilde_ ? "xt[" : "x[";
    std::vector<std::pair<Scalar, std::string>> parts;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (k) mono += ' ';
            mono += head + std::to_string(m[k].first) + ',' + std::to_string(m[k].second) + ']';
        }
        parts.emplace_back(c, mono);
    }
    return format_combination(parts);
}

// ---------------------------------------------------------------- rewriting

bool xi_descending(const XiLetter& a, const XiLetter& b) { return a > b; }

bool tilde_descending(const XiLetter& a, const XiLetter& b) {
    return std::make_pair(-a.first, a.second) > std::make_pair(-b.first, b.second);
}

std::vector<std::pair<Scalar, XiMonomial>> xi_rewrite_pair(const XiLetter& a, const XiLetter& b, Field field) {
    if (!xi_descending(a, b)) throw PreconditionError("xi_rewrite_pair: pair already ordered");
    const auto [r1, s1] = a;
    const auto [r2, s2] = b;
    const XiMonomial swapped{b, a};
    if (r1 == r2 || s1 == s2) return {{field.zeta_pow(-1), swapped}};
    // Here r2 < r1.
    if (s2 > s1) return {{field.one(), swapped}};
    const Scalar c = field.zeta() - field.zeta_pow(-1);
    return {{field.one(), swapped}, {-c, XiMonomial{{r1, s2}, {r2, s1}}}};
}

std::vector<std::pair<Scalar, XiMonomial>> tilde_rewrite_pair(const XiLetter& a, const XiLetter& b, Field field) {
    if (!tilde_descending(a, b)) throw PreconditionError("tilde_rewrite_pair: pair already ordered");
    const auto [r, s] = a;
    const auto [r2, s2] = b;
    const XiMonomial swapped{b, a};
    if (r == r2) return {{field.zeta_pow(-1), swapped}};
    // Here r < r2.
    const Scalar c = field.zeta() - field.zeta_pow(-1);
    // The printed form of this relation has no zeta^-1; without it the system is
    // not confluent from n = 4 on and xt_{12}, xt_{23} violate the Serre relation.
    if (s == r2) return {{field.zeta_pow(-1), swapped}, {c, XiMonomial{{r, s2}}}};
    if (s < r2 || s2 < s) return {{field.one(), swapped}};
    if (s2 == s) return {{field.zeta(), swapped}};
    return {{field.one(), swapped}, {c, XiMonomial{{r2, s}, {r, s2}}}};
}

namespace {

using PairTest = bool (*)(const XiLetter&, const XiLetter&);
using PairRule = std::vector<std::pair<Scalar, XiMonomial>> (*)(const XiLetter&, const XiLetter&, Field);

XiPoly normalize(const XiPoly& p, PairTest descending, PairRule rule, Strategy strategy) {
    const Field f = p.field();
    XiPoly result(f, p.tilde());
    std::map<XiMonomial, Scalar> pending = p.terms();
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const XiMonomial& m = node.key();
        const Scalar& c = node.mapped();
        std::ptrdiff_t pos = -1;
        if (strategy == Strategy::Leftmost) {
            for (std::size_t k = 0; k + 1 < m.size(); ++k)
                if (descending(m[k], m[k + 1])) {
                    pos = static_cast<std::ptrdiff_t>(k);
                    break;
                }
        } else {
            for (std::size_t k = m.size(); k-- > 1;)
                if (descending(m[k - 1], m[k])) {
                    pos = static_cast<std::ptrdiff_t>(k - 1);
                    break;
                }
        }
        if (pos < 0) {
            result.add_term(m, c);
            continue;
        }
        const auto k = static_cast<std::size_t>(pos);
        for (const auto& [d, repl] : rule(m[k], m[k + 1], f)) {
            XiMonomial next(m.begin(), m.begin() + pos);
            next.insert(next.end(), repl.begin(), repl.end());
            next.insert(next.end(), m.begin() + pos + 2, m.end());
            Scalar coeff = c * d;
            auto it = pending.find(next);
            if (it == pending.end()) {
                pending.emplace(std::move(next), std::move(coeff));
            } else {
                it->second += coeff;
                if (it->second.is_zero()) pending.erase(it);
            }
        }
    }
    return result;
}

}  // namespace

XiPoly xi_normal_form(const XiPoly& p, Strategy strategy) {
    if (p.tilde()) throw PreconditionError("xi_normal_form expects x[..] terms");
    return normalize(p, xi_descending, xi_rewrite_pair, strategy);
}

XiPoly tilde_normal_form(const XiPoly& p, Strategy strategy) {
    if (!p.tilde()) throw PreconditionError("tilde_normal_form expects xt[..] terms");
    return normalize(p, tilde_descending, tilde_rewrite_pair, strategy);
}

// ---------------------------------------------------------------- PBW cross-check

PbwCrosscheck pbw_count_crosscheck(int n, const Weight& beta, Field field, int degree_bound) {
    const std::vector<int> m = simple_multiplicities(beta);
    PbwCrosscheck out;
    out.dim = graded_basis(n, beta, Alphabet::E, field, degree_bound).dim();

    // Ordered monomials: letters in key order (-r, s), each with an exponent.
    std::vector<XiLetter> letters;
    for (int r = n - 1; r >= 1; --r)
        for (int s = r + 1; s <= n; ++s) letters.emplace_back(r, s);
    std::map<XiMonomial, int> ordered;
    std::vector<int> rest = m;
    XiMonomial current;
    std::function<void(std::size_t)> enumerate = [&](std::size_t k) {
        if (k == letters.size()) {
            if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; }))
                ordered.emplace(current, static_cast<int>(ordered.size()));
            return;
        }
        enumerate(k + 1);
        const auto [r, s] = letters[k];
        int used = 0;
        while (true) {
            bool fits = true;
            for (int i = r; i < s; ++i) fits = fits && rest[static_cast<std::size_t>(i - 1)] > 0;
            if (!fits) break;
            for (int i = r; i < s; ++i) --rest[static_cast<std::size_t>(i - 1)];
            current.push_back(letters[k]);
            ++used;
            enumerate(k + 1);
        }
        for (int i = r; i < s; ++i) rest[static_cast<std::size_t>(i - 1)] += used;
        current.resize(current.size() - static_cast<std::size_t>(used));
    };
    enumerate(0);
    out.count = ordered.size();

    // Normal forms of all words in the generators xt_{i,i+1}.
    Word w;
    for (int i = 1; i < n; ++i) w.insert(w.end(), static_cast<std::size_t>(m[static_cast<std::size_t>(i - 1)]), i);
    Echelon span(field);
    do {
        XiMonomial mono;
        for (int i : w) mono.emplace_back(i, i + 1);
        const XiPoly nf = tilde_normal_form(XiPoly::monomial(field, true, mono, field.one()));
        SparseVector v;
        for (const auto& [term, c] : nf.terms()) {
            auto it = ordered.find(term);
            if (it == ordered.end()) throw std::logic_error("pbw_count_crosscheck: normal form left the ordered monomials");
            v.emplace(it->second, c);
        }
        span.insert(std::move(v));
    } while (std::next_permutation(w.begin(), w.end()));
    out.span = span.rank();
    return out;
}

// ---------------------------------------------------------------- tensor evaluation

Scalar evaluate_on_tensor(const XiMonomial& word, const std::vector<Generator>& u, int n, Field field,
                          int tensor_bound) {
    if (static_cast<int>(word.size()) > tensor_bound) throw BoundExceeded("evaluate_on_tensor: word too long");
    Tensor rows, cols;
    for (const auto& [r, s] : word) {
        if (r < 1 || r > n || s < 1 || s > n) throw PreconditionError("xi index out of range");
        rows.push_back(r);
        cols.push_back(s);
    }
    std::map<Tensor, Scalar> state{{cols, field.one()}};
    for (auto g = u.rbegin(); g != u.rend(); ++g) {
        std::map<Tensor, Scalar> next;
        for (const auto& [t, c] : state)
            for (const auto& [t2, d] : apply_generator(*g, t, n, field)) {
                auto it = next.find(t2);
                if (it == next.end()) next.emplace(t2, c * d);
                else it->second += c * d;
            }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        state = std::move(next);
    }
    auto it = state.find(rows);
    return it == state.end() ? field.zero() : it->second;
}

Scalar evaluate_on_tensor(const XiPoly& p, const std::vector<Generator>& u, int n, int tensor_bound) {
    if (p.tilde()) throw PreconditionError("evaluate_on_tensor expects x[..] terms");
    Scalar total = p.field().zero();
    for (const auto& [m, c] : p.terms()) total += c * evaluate_on_tensor(m, u, n, p.field(), tensor_bound);
    return total;
}

// ---------------------------------------------------------------- relation verification

std::vector<std::pair<std::string, XiPoly>> xi_relations(int n, Field field) {
    std::vector<std::pair<std::string, XiPoly>> out;
    const Scalar z = field.zeta();
    const Scalar c = field.zeta() - field.zeta_pow(-1);
    auto rel = [&](XiMonomial lhs, std::vector<std::pair<Scalar, XiMonomial>> rhs) {
        XiPoly p = XiPoly::monomial(field, false, std::move(lhs), field.one());
        for (auto& [coef, m] : rhs) p.add_term(m, -coef);
        return p;
    };
    for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s)
            for (int s2 = s + 1; s2 <= n; ++s2)
                out.emplace_back("row", rel({{r, s}, {r, s2}}, {{z, {{r, s2}, {r, s}}}}));
    for (int s = 1; s <= n; ++s)
        for (int r = 1; r <= n; ++r)
            for (int r2 = r + 1; r2 <= n; ++r2)
                out.emplace_back("column", rel({{r, s}, {r2, s}}, {{z, {{r2, s}, {r, s}}}}));
    for (int r = 1; r <= n; ++r)
        for (int r2 = r + 1; r2 <= n; ++r2)
            for (int s = 1; s <= n; ++s)
                for (int s2 = 1; s2 <= n; ++s2) {
                    if (s > s2)
                        out.emplace_back("anti-diagonal", rel({{r, s}, {r2, s2}}, {{field.one(), {{r2, s2}, {r, s}}}}));
                    if (s < s2)
                        out.emplace_back("diagonal", rel({{r, s}, {r2, s2}}, {{field.one(), {{r2, s2}, {r, s}}},
                                                                                {c, {{r2, s}, {r, s2}}}}));
                }
    return out;
}

RelationReport verify_relations(int n, Field field) {
    if (n < 2) throw PreconditionError("verify_relations: n must be at least 2");
    if (n > 4) throw BoundExceeded("verify_relations: n exceeds 4");
    RelationReport report;
    report.n = n;
    const auto gens = all_generators(n);
    std::vector<SparseMatrix> gmats;
    for (const auto& g : gens) gmats.push_back(generator_matrix(g, n, 2, field));
    const std::size_t dim = static_cast<std::size_t>(n * n);

    auto flatten = [&](const SparseMatrix& m) {
        SparseVector v;
        for (std::size_t i = 0; i < dim; ++i)
            for (const auto& [j, x] : m.row(i)) v.emplace(static_cast<int>(i * dim + static_cast<std::size_t>(j)), x);
        return v;
    };

    // Span growth: left-multiply by generators until nothing new appears.
    struct Operator {
        SparseMatrix m;
        std::vector<std::size_t> word;  // generator indices, leftmost first
    };
    Echelon span(field);
    std::vector<Operator> basis;
    std::deque<std::size_t> queue;
    SparseMatrix id(dim, dim, field);
    for (std::size_t i = 0; i < dim; ++i) id.add(i, i, field.one());
    span.insert(flatten(id));
    basis.push_back(Operator{id, {}});
    queue.push_back(0);
    while (!queue.empty()) {
        const std::size_t k = queue.front();
        queue.pop_front();
        for (std::size_t g = 0; g < gens.size(); ++g) {
            SparseMatrix prod = gmats[g] * basis[k].m;
            if (!span.insert(flatten(prod))) continue;
            std::vector<std::size_t> word{g};
            word.insert(word.end(), basis[k].word.begin(), basis[k].word.end());
            basis.push_back(Operator{std::move(prod), std::move(word)});
            queue.push_back(basis.size() - 1);
        }
    }
    report.subalgebra_dim = span.rank();

    bool row_one_seen = false, row_one_ok = true;
    for (const auto& [family, rel] : xi_relations(n, field)) {
        ++report.checked[family];
        const bool row_one = family == "row" && rel.terms().begin()->first.front().first == 1;
        row_one_seen = row_one_seen || row_one;
        for (const auto& op : basis) {
            Scalar value = field.zero();
            for (const auto& [m, c] : rel.terms()) {
                const std::size_t row = tensor_index({m[0].first, m[1].first}, n);
                const std::size_t col = tensor_index({m[0].second, m[1].second}, n);
                value += c * op.m.get(row, col);
            }
            if (value.is_zero()) continue;
            if (row_one) row_one_ok = false;
            std::string witness;
            for (std::size_t g : op.word) witness += (witness.empty() ? "" : " ") + gens[g].to_string();
            report.violations.push_back(RelationViolation{family, rel.to_string(), witness.empty() ? "1" : witness});
            break;
        }
    }
    report.row_one_commutation = row_one_seen && row_one_ok;
    return report;
}

}  // namespace qkoszul
