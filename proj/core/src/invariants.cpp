#include "qkoszul/invariants.hpp"

#include "qkoszul/errors.hpp"
#include "qkoszul/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

namespace qkoszul {

namespace {

// 2 (rho, mu) for mu in the root lattice; (rho, alpha_i) = 1.
int twist_exponent(const Weight& mu) {
    const int e = dot(Weight::rho(mu.n()), mu);
    return 2 * e;
}

Scalar action_factor(const WeylElt& w, const Weight& lambda, Field field, Twist twist) {
    if (twist == Twist::Untwisted) return field.one();
    const int e = twist_exponent(w.apply(lambda) - lambda);
    if (e % 2) throw std::logic_error("odd twist exponent");  // never: the exponent is 2 (rho, .)
    return field.zeta_pow(e);
}

std::vector<Weight> orbit(const Weight& lambda, const Parabolic& j) {
    std::set<Weight> seen{lambda};
    std::deque<Weight> queue{lambda};
    std::vector<Weight> out;
    while (!queue.empty()) {
        Weight mu = queue.front();
        queue.pop_front();
        out.push_back(mu);
        for (int i : j) {
            Weight nu = mu;
            std::swap(nu[i], nu[i + 1]);
            if (seen.insert(nu).second) queue.push_back(nu);
        }
    }
    return out;
}

// Non-increasing weights with coordinates in [-box, box] and coordinate sum `total`.
void dominant_in_box(int n, int box, int total, std::vector<int>& cur, std::vector<Weight>& out) {
    const int k = static_cast<int>(cur.size());
    if (k == n) {
        if (total == 0) out.emplace_back(cur);
        return;
    }
    const int hi = k ? cur.back() : box;
    const int left = n - k;
    for (int x = hi; x >= -box; --x) {
        // the remaining coordinates lie in [-box, x]
        if (total - x < -(left - 1) * box) continue;
        if (total - x > (left - 1) * x) break;
        cur.push_back(x);
        dominant_in_box(n, box, total - x, cur, out);
        cur.pop_back();
    }
}

}  // namespace

GroupAlgebraElement GroupAlgebraElement::chi(const Weight& lambda, Field field) { return chi(lambda, field.one()); }

GroupAlgebraElement GroupAlgebraElement::chi(const Weight& lambda, const Scalar& c) {
    GroupAlgebraElement out(lambda.n(), c.field());
    out.add_term(lambda, c);
    return out;
}

Scalar GroupAlgebraElement::coefficient(const Weight& lambda) const {
    const auto it = terms_.find(lambda);
    return it == terms_.end() ? field_.zero() : it->second;
}

void GroupAlgebraElement::check_compatible(const GroupAlgebraElement& o) const {
    if (n_ != o.n_) throw PreconditionError("group algebra elements of different rank");
    if (!(field_ == o.field_)) throw ModeMismatch("group algebra elements over different fields");
}

void GroupAlgebraElement::add_term(const Weight& lambda, const Scalar& c) {
    if (lambda.n() != n_) throw PreconditionError("weight " + lambda.to_string() + " has the wrong rank");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(lambda, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    check_compatible(o);
    for (const auto& [l, c] : o.terms_) add_term(l, c);
    return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.check_compatible(b);
    GroupAlgebraElement out(a.n_, a.field_);
    for (const auto& [l, c] : a.terms_)
        for (const auto& [m, d] : b.terms_) out.add_term(l + m, c * d);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Scalar& s) const {
    GroupAlgebraElement out(n_, field_);
    if (s.is_zero()) return out;
    for (const auto& [l, c] : terms_) out.terms_.emplace(l, c * s);
    return out;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

int GroupAlgebraElement::max_abs_coordinate() const {
    int m = 0;
    for (const auto& [l, c] : terms_)
        for (int x : l.coords()) m = std::max(m, std::abs(x));
    return m;
}

std::string GroupAlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest weights first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string c = it->second.to_string();
        bool negative = !c.empty() && c[0] == '-';
        const bool compound = c.find(' ') != std::string::npos;
        if (negative && compound) {
            c = (-it->second).to_string();
        } else if (negative) {
            c.erase(0, 1);
        }
        if (!out.empty()) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        if (compound) c = "(" + c + ")";
        if (c != "1") out += c + " * ";
        out += "chi[" + it->first.to_string() + "]";
    }
    return out;
}

GroupAlgebraElement twisted_action(const WeylElt& w, const GroupAlgebraElement& f, Twist twist) {
    if (w.n() != f.n()) throw PreconditionError("twisted_action: rank mismatch");
    GroupAlgebraElement out(f.n(), f.field());
    for (const auto& [l, c] : f.terms()) out.add_term(w.apply(l), c * action_factor(w, l, f.field(), twist));
    return out;
}

Parabolic full_weyl(int n) {
    Parabolic j;
    for (int i = 1; i < n; ++i) j.push_back(i);
    return j;
}

Parabolic stabilizer_of_first(int n) {
    Parabolic j;
    for (int i = 2; i < n; ++i) j.push_back(i);
    return j;
}

std::optional<GroupAlgebraElement> orbit_invariant_basis(const Weight& lambda, const Parabolic& j, Field field,
                                                         Twist twist) {
    const int n = lambda.n();
    for (int i : j)
        if (i < 1 || i >= n) throw PreconditionError("simple reflection index out of range");
    std::vector<Weight> pts = orbit(lambda, j);
    std::sort(pts.begin(), pts.end());
    auto index = [&](const Weight& mu) {
        return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), mu) - pts.begin());
    };
    // Rows: coefficient of chi_{s mu} in s o f - f, for each s and mu.
    SparseMatrix eqs(pts.size() * j.size(), pts.size(), field);
    std::size_t row = 0;
    for (int i : j) {
        const WeylElt s = WeylElt::simple(n, i);
        for (const Weight& mu : pts) {
            const Weight nu = s.apply(mu);
            eqs.add(row, index(mu), action_factor(s, mu, field, twist));
            eqs.add(row, index(nu), -field.one());
            ++row;
        }
    }
    const auto kernel = nullspace(eqs);
    if (kernel.empty()) return std::nullopt;
    if (kernel.size() > 1) throw std::logic_error("orbit invariants are more than one-dimensional");
    const SparseVector& v = kernel.front();
    const auto at = v.find(static_cast<int>(index(lambda)));
    if (at == v.end()) throw std::logic_error("orbit invariant vanishes at its base weight");
    const Scalar norm = at->second.inverse();
    GroupAlgebraElement out(n, field);
    for (const auto& [k, c] : v) out.add_term(pts[static_cast<std::size_t>(k)], c * norm);
    return out;
}

bool is_invariant(const GroupAlgebraElement& f, const Parabolic& j, Twist twist) {
    for (int i : j)
        if (!(twisted_action(WeylElt::simple(f.n(), i), f, twist) == f)) return false;
    return true;
}

GroupAlgebraElement recompose(const std::vector<GroupAlgebraElement>& f) {
    if (f.empty()) throw PreconditionError("recompose: no components");
    const int n = f.front().n();
    GroupAlgebraElement out(n, f.front().field());
    for (std::size_t a = 0; a < f.size(); ++a)
        out += f[a] * GroupAlgebraElement::chi(static_cast<int>(a) * Weight::epsilon(n, 1), f.front().field());
    return out;
}

Decomposition decompose(const GroupAlgebraElement& g, int box, Twist twist) {
    const int n = g.n();
    const Field field = g.field();
    Decomposition out;
    out.box = box > 0 ? box : n + 2;
    out.f.assign(static_cast<std::size_t>(n), GroupAlgebraElement(n, field));
    if (g.max_abs_coordinate() > out.box)
        throw BoundExceeded("support of g leaves the weight box [-" + std::to_string(out.box) + ", " +
                            std::to_string(out.box) + "]");
    if (!is_invariant(g, stabilizer_of_first(n), twist))
        throw PreconditionError("decompose: input is not invariant under the stabilizer of the first coordinate");

    std::map<int, std::vector<std::pair<Weight, Scalar>>> by_degree;
    for (const auto& [l, c] : g.terms()) by_degree[l.total()].emplace_back(l, c);

    const Parabolic w = full_weyl(n);
    for (const auto& [deg, terms] : by_degree) {
        // Columns: (a, orbit sum of a dominant mu of degree deg - a) times chi_{a eps_1}.
        std::vector<std::pair<int, GroupAlgebraElement>> columns;
        for (int a = 0; a < n; ++a) {
            std::vector<Weight> dominant;
            std::vector<int> cur;
            dominant_in_box(n, out.box, deg - a, cur, dominant);
            for (const Weight& mu : dominant) {
                auto inv = orbit_invariant_basis(mu, w, field, twist);
                if (inv) columns.emplace_back(a, std::move(*inv));
            }
        }
        // Every column is W_J-invariant (the action is by algebra automorphisms fixing
        // chi_{a eps_1}), so coefficients at W_J-dominant weights determine it.
        auto representative = [](const Weight& l) {
            const auto& c = l.coords();
            return std::is_sorted(c.begin() + 1, c.end(), std::greater<>());
        };
        std::map<Weight, int> rows;
        for (const auto& [l, c] : terms)
            if (representative(l)) rows.emplace(l, static_cast<int>(rows.size()));
        std::vector<GroupAlgebraElement> images;
        for (const auto& [a, inv] : columns) {
            images.push_back(inv * GroupAlgebraElement::chi(a * Weight::epsilon(n, 1), field));
            for (const auto& [l, c] : images.back().terms())
                if (representative(l)) rows.emplace(l, static_cast<int>(rows.size()));
        }
        SparseMatrix m(rows.size(), columns.size(), field);
        for (std::size_t col = 0; col < images.size(); ++col)
            for (const auto& [l, c] : images[col].terms())
                if (representative(l)) m.add(static_cast<std::size_t>(rows.at(l)), col, c);
        SparseVector rhs;
        for (const auto& [l, c] : terms)
            if (representative(l)) rhs.emplace(rows.at(l), c);

        bool unique = false;
        const auto x = solve(m, rhs, &unique);
        if (!x)
            throw BoundExceeded("decompose: no solution in the weight box of size " + std::to_string(out.box) +
                                " (degree " + std::to_string(deg) + "); enlarge the box");
        out.unknowns += columns.size();
        out.rank += unique ? columns.size() : matrix_rank(m);
        for (const auto& [col, c] : *x) {
            const auto& [a, inv] = columns[static_cast<std::size_t>(col)];
            out.f[static_cast<std::size_t>(a)] += inv.scaled(c);
        }
    }
    return out;
}

}  // namespace qkoszul
