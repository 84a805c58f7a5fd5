#include "qkoszul/qalgebra.hpp"

#include "qkoszul/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qkoszul {

namespace {

void check_letters(int n, const Word& w) {
    for (int i : w)
        if (i < 1 || i >= n) throw PreconditionError("generator index out of range");
}

std::vector<int> letter_counts(int n, const Word& w) {
    std::vector<int> m(static_cast<std::size_t>(n - 1), 0);
    for (int i : w) ++m[static_cast<std::size_t>(i - 1)];
    return m;
}

Word remove_at(const Word& w, std::size_t p) {
    Word out;
    out.reserve(w.size() - 1);
    for (std::size_t k = 0; k < w.size(); ++k)
        if (k != p) out.push_back(w[k]);
    return out;
}

}  // namespace

Weight word_degree(int n, const Word& w) {
    check_letters(n, w);
    Weight beta(n);
    for (int i : w) {
        beta[i] += 1;
        beta[i + 1] -= 1;
    }
    return beta;
}

std::vector<int> simple_multiplicities(const Weight& beta) {
    const int n = beta.n();
    if (n < 1) throw PreconditionError("empty weight");
    std::vector<int> m;
    int partial = 0;
    for (int i = 1; i < n; ++i) {
        partial += beta[i];
        if (partial < 0) throw PreconditionError("degree is not in Q+: " + beta.to_string());
        m.push_back(partial);
    }
    if (partial + beta[n] != 0) throw PreconditionError("degree is not in the root lattice: " + beta.to_string());
    return m;
}

// ---------------------------------------------------------------- NCPoly

NCPoly::NCPoly(int n, Alphabet alphabet, Field field) : n_(n), alphabet_(alphabet), field_(field) {
    if (n < 1) throw PreconditionError("NCPoly: n must be positive");
}

NCPoly NCPoly::unit(int n, Alphabet alphabet, Field field) { return monomial(n, alphabet, field, {}); }

NCPoly NCPoly::monomial(int n, Alphabet alphabet, Field field, Word w) {
    NCPoly p(n, alphabet, field);
    p.add_term(w, field.one());
    return p;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    check_letters(n_, w);
    if (c.is_zero()) return;
    if (c.order() != field_.order()) throw ModeMismatch("NCPoly coefficient mode differs from its field");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool NCPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto m = letter_counts(n_, terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return letter_counts(n_, t.first) == m; });
}

Weight NCPoly::degree() const {
    if (terms_.empty()) throw PreconditionError("zero element has no degree");
    if (!is_homogeneous()) throw PreconditionError("inhomogeneous element");
    return word_degree(n_, terms_.begin()->first);
}

void NCPoly::check_compatible(const NCPoly& o) const {
    if (n_ != o.n_ || alphabet_ != o.alphabet_) throw PreconditionError("NCPoly: incompatible operands");
    if (field_ != o.field_) throw ModeMismatch("NCPoly: operands in different modes");
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    a.check_compatible(b);
    NCPoly out(a.n_, a.alphabet_, a.field_);
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add_term(w, c * d);
        }
    return out;
}

NCPoly NCPoly::scaled(const Scalar& s) const {
    NCPoly out(n_, alphabet_, field_);
    for (const auto& [w, c] : terms_) out.add_term(w, c * s);
    return out;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.n_ == b.n_ && a.alphabet_ == b.alphabet_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

std::string NCPoly::to_string() const {
    const char letter = alphabet_ == Alphabet::E ? 'e' : 'f';
    std::vector<std::pair<Scalar, std::string>> parts;
    for (const auto& [w, c] : terms_) {
        std::string mono;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k) mono += ' ';
            mono += letter;
            mono += '[' + std::to_string(w[k]) + ']';
        }
        parts.emplace_back(c, mono);
    }
    return format_combination(parts);
}

// ---------------------------------------------------------------- GradedPiece

struct GradedPiece::Impl {
    int n = 0;
    Alphabet alphabet = Alphabet::E;
    Field field;
    Weight beta;
    std::vector<Word> words;
    std::map<Word, int> column;
    std::vector<Word> basis;
    std::map<int, std::size_t> basis_position;  // word column -> basis index
    Echelon relations{Field::generic()};
};

int GradedPiece::n() const { return impl_->n; }
Alphabet GradedPiece::alphabet() const { return impl_->alphabet; }
Field GradedPiece::field() const { return impl_->field; }
const Weight& GradedPiece::beta() const { return impl_->beta; }
std::size_t GradedPiece::dim() const { return impl_->basis.size(); }
const std::vector<Word>& GradedPiece::basis() const { return impl_->basis; }
const std::vector<Word>& GradedPiece::words() const { return impl_->words; }
std::size_t GradedPiece::relation_rank() const { return impl_->relations.rank(); }

SparseVector GradedPiece::coordinates(const Word& w) const {
    auto it = impl_->column.find(w);
    if (it == impl_->column.end()) throw PreconditionError("word has the wrong degree for this piece");
    SparseVector v;
    v.emplace(it->second, impl_->field.one());
    SparseVector out;
    for (auto& [col, c] : impl_->relations.reduce(std::move(v)))
        out.emplace(static_cast<int>(impl_->basis_position.at(col)), std::move(c));
    return out;
}

SparseVector GradedPiece::coordinates(const NCPoly& p) const {
    SparseVector out;
    for (const auto& [w, c] : p.terms()) {
        for (const auto& [k, x] : coordinates(w)) {
            auto it = out.find(k);
            if (it == out.end()) {
                out.emplace(k, c * x);
            } else {
                it->second += c * x;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

bool GradedPiece::is_relation(const NCPoly& p) const { return coordinates(p).empty(); }

GradedPiece graded_basis(int n, const Weight& beta, Alphabet alphabet, Field field, int degree_bound) {
    if (beta.n() != n) throw PreconditionError("graded_basis: rank mismatch");
    const std::vector<int> m = simple_multiplicities(beta);
    const int size = std::accumulate(m.begin(), m.end(), 0);
    if (size > degree_bound) throw BoundExceeded("graded_basis: |beta| exceeds the degree bound");
    if (!field.is_generic() && field.ell() < n)
        throw PreconditionError("graded_basis: root-of-unity mode requires ell >= n");
    const Scalar q2 = field.quantum_integer(2);
    if (n >= 3 && q2.is_zero()) throw PreconditionError("graded_basis: [2] vanishes, Serre relations degenerate");

    auto impl = std::make_shared<GradedPiece::Impl>();
    impl->n = n;
    impl->alphabet = alphabet;
    impl->field = field;
    impl->beta = beta;
    impl->relations = Echelon(field, Echelon::Pivot::Last);

    Word w;
    for (int i = 1; i < n; ++i) w.insert(w.end(), static_cast<std::size_t>(m[static_cast<std::size_t>(i - 1)]), i);
    do {
        impl->column.emplace(w, static_cast<int>(impl->words.size()));
        impl->words.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));

    // Each consequence u*S*v is generated once, from the word in which S's
    // leading monomial (e_i e_i e_j, or e_i e_j with i < j - 1) sits at u's end.
    const Scalar one = field.one();
    auto column = [&](const Word& x) { return impl->column.at(x); };
    for (const Word& x : impl->words) {
        for (std::size_t p = 0; p < x.size(); ++p) {
            const int i = x[p];
            if (p + 1 < x.size()) {
                const int j = x[p + 1];
                if (j - i > 1) {
                    Word y = x;
                    std::swap(y[p], y[p + 1]);
                    SparseVector rel;
                    rel.emplace(column(x), one);
                    rel.emplace(column(y), -one);
                    impl->relations.insert(std::move(rel));
                }
            }
            if (p + 2 < x.size() && x[p + 1] == i && std::abs(x[p + 2] - i) == 1) {
                const int j = x[p + 2];
                Word mid = x, last = x;
                mid[p + 1] = j;
                mid[p + 2] = i;
                last[p] = j;
                last[p + 2] = i;
                SparseVector rel;
                rel.emplace(column(x), one);
                rel.emplace(column(mid), -q2);
                rel.emplace(column(last), one);
                impl->relations.insert(std::move(rel));
            }
        }
    }
    for (std::size_t c = 0; c < impl->words.size(); ++c) {
        if (impl->relations.is_pivot(static_cast<int>(c))) continue;
        impl->basis_position.emplace(static_cast<int>(c), impl->basis.size());
        impl->basis.push_back(impl->words[c]);
    }
    GradedPiece piece;
    piece.impl_ = std::move(impl);
    return piece;
}

std::uint64_t kostant_partition_count(const Weight& beta) {
    const std::vector<int> m = simple_multiplicities(beta);
    const int n = beta.n();
    // Positive root alpha_{rs} covers simple roots r..s-1.
    const RootSubset roots = positive_roots(n);
    std::vector<int> rest = m;
    std::function<std::uint64_t(std::size_t)> count = [&](std::size_t k) -> std::uint64_t {
        if (k == roots.size())
            return std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; }) ? 1 : 0;
        const auto [r, s] = roots[k];
        std::uint64_t total = count(k + 1);
        int used = 0;
        while (true) {
            bool fits = true;
            for (int i = r; i < s; ++i) fits = fits && rest[static_cast<std::size_t>(i - 1)] > 0;
            if (!fits) break;
            for (int i = r; i < s; ++i) --rest[static_cast<std::size_t>(i - 1)];
            ++used;
            total += count(k + 1);
        }
        for (int i = r; i < s; ++i) rest[static_cast<std::size_t>(i - 1)] += used;
        return total;
    };
    return count(0);
}

// ---------------------------------------------------------------- coproduct and pairing

std::vector<CoproductTerm> coproduct(const Word& x, Field field) {
    if (x.size() > 20) throw BoundExceeded("coproduct: word too long");
    std::vector<CoproductTerm> out;
    const std::size_t len = x.size();
    for (std::uint32_t mask = 0; mask < (1U << len); ++mask) {
        // Bit set: the letter goes to the right factor and leaves k_i behind,
        // which is then moved right past every later left letter.
        Word left, right;
        int exponent = 0;
        for (std::size_t q = 0; q < len; ++q) {
            if (!(mask >> q & 1U)) {
                left.push_back(x[q]);
                continue;
            }
            right.push_back(x[q]);
            for (std::size_t p = q + 1; p < len; ++p)
                if (!(mask >> p & 1U)) exponent += cartan(x[q], x[p]);
        }
        out.push_back(CoproductTerm{std::move(left), std::move(right), field.zeta_pow(exponent)});
    }
    return out;
}

namespace {

class PairingEvaluator {
public:
    explicit PairingEvaluator(Field field) : field_(field) {
        const Scalar d = field.zeta() - field.zeta_pow(-1);
        if (d.is_zero()) throw PreconditionError("drinfeld_pairing: zeta - zeta^-1 vanishes");
        inv_ = d.inverse();
    }

    // Peels the last f-letter: tau(x, y' f_j) pairs f_j with the left tensor
    // factor of Delta(x), a single e_j whose trailing k's pair nontrivially.
    Scalar tau(const Word& x, const Word& y) {
        if (x.size() != y.size()) return field_.zero();
        if (x.empty()) return field_.one();
        auto key = std::make_pair(x, y);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const int j = y.back();
        const Word head(y.begin(), y.end() - 1);
        Scalar total = field_.zero();
        for (std::size_t p = 0; p < x.size(); ++p) {
            if (x[p] != j) continue;
            int exponent = 0;
            for (std::size_t q = p + 1; q < x.size(); ++q) exponent -= cartan(j, x[q]);
            Scalar sub = tau(remove_at(x, p), head);
            if (!sub.is_zero()) total += field_.zeta_pow(exponent) * sub;
        }
        total *= inv_;
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    Field field_;
    Scalar inv_;
    std::map<std::pair<Word, Word>, Scalar> memo_;
};

bool same_letters(Word a, Word b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace

Scalar drinfeld_pairing(const Word& x, const Word& y, Field field) {
    if (!same_letters(x, y)) return field.zero();
    PairingEvaluator eval(field);
    return eval.tau(x, y);
}

Scalar drinfeld_pairing(const NCPoly& x, const NCPoly& y) {
    if (x.alphabet() != Alphabet::E || y.alphabet() != Alphabet::F)
        throw PreconditionError("drinfeld_pairing: expects (E-element, F-element)");
    if (x.n() != y.n()) throw PreconditionError("drinfeld_pairing: rank mismatch");
    if (x.field() != y.field()) throw ModeMismatch("drinfeld_pairing: operands in different modes");
    if (!x.is_homogeneous() || !y.is_homogeneous()) throw PreconditionError("drinfeld_pairing: inhomogeneous input");
    const Field f = x.field();
    Scalar total = f.zero();
    if (x.is_zero() || y.is_zero()) return total;
    if (x.degree() != y.degree()) return total;
    PairingEvaluator eval(f);
    for (const auto& [u, c] : x.terms())
        for (const auto& [v, d] : y.terms()) total += c * d * eval.tau(u, v);
    return total;
}

ScalarMatrix pairing_gram(int n, const Weight& beta, Field field, int degree_bound) {
    const GradedPiece e = graded_basis(n, beta, Alphabet::E, field, degree_bound);
    const GradedPiece f = graded_basis(n, beta, Alphabet::F, field, degree_bound);
    ScalarMatrix gram(e.dim(), f.dim(), field);
    PairingEvaluator eval(field);
    for (std::size_t a = 0; a < e.dim(); ++a)
        for (std::size_t b = 0; b < f.dim(); ++b) gram(a, b) = eval.tau(e.basis()[a], f.basis()[b]);
    return gram;
}

std::size_t pairing_gram_rank(int n, const Weight& beta, Field field, int degree_bound) {
    return matrix_rank(pairing_gram(n, beta, field, degree_bound));
}

// ---------------------------------------------------------------- dual map

Functional::Functional(GradedPiece piece, std::vector<Scalar> values)
    : piece_(std::move(piece)), values_(std::move(values)) {
    if (values_.size() != piece_.dim()) throw PreconditionError("Functional: value count differs from dimension");
}

Scalar Functional::operator()(const Word& w) const {
    Scalar total = piece_.field().zero();
    for (const auto& [k, c] : piece_.coordinates(w)) total += c * values_[static_cast<std::size_t>(k)];
    return total;
}

Functional dual_map_F(const NCPoly& y, int degree_bound) {
    if (y.alphabet() != Alphabet::F) throw PreconditionError("dual_map_F: expects an F-element");
    if (y.is_zero()) throw PreconditionError("dual_map_F: zero element has no degree");
    const Weight beta = y.degree();
    GradedPiece piece = graded_basis(y.n(), beta, Alphabet::E, y.field(), degree_bound);
    PairingEvaluator eval(y.field());
    std::vector<Scalar> values;
    values.reserve(piece.dim());
    for (const Word& x : piece.basis()) {
        Scalar v = y.field().zero();
        for (const auto& [w, c] : y.terms()) v += c * eval.tau(x, w);
        values.push_back(std::move(v));
    }
    return Functional(std::move(piece), std::move(values));
}

Functional dual_product(const Functional& phi, const Functional& psi, const GradedPiece& target) {
    const Field f = target.field();
    if (phi.piece().field() != f || psi.piece().field() != f) throw ModeMismatch("dual_product: mode mismatch");
    if (phi.piece().beta() + psi.piece().beta() != target.beta())
        throw PreconditionError("dual_product: target degree is not the sum of the factor degrees");
    const std::vector<int> left_counts = simple_multiplicities(phi.piece().beta());
    const int n = target.n();
    std::vector<Scalar> values;
    for (const Word& x : target.basis()) {
        Scalar total = f.zero();
        const std::size_t len = x.size();
        for (std::uint32_t mask = 0; mask < (1U << len); ++mask) {
            Word left, right;
            for (std::size_t p = 0; p < len; ++p) (mask >> p & 1U ? left : right).push_back(x[p]);
            if (letter_counts(n, left) != left_counts) continue;
            // Group-likes moved to the left of the left factor, where phi ignores them.
            int exponent = 0;
            for (std::size_t p = 0; p < len; ++p)
                if (mask >> p & 1U)
                    for (std::size_t q = p + 1; q < len; ++q)
                        if (!(mask >> q & 1U)) exponent -= cartan(x[p], x[q]);
            const Scalar a = phi(left);
            if (a.is_zero()) continue;
            const Scalar b = psi(right);
            if (!b.is_zero()) total += f.zeta_pow(exponent) * a * b;
        }
        values.push_back(std::move(total));
    }
    return Functional(target, std::move(values));
}

}  // namespace qkoszul
