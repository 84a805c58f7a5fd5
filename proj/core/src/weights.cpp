#include "qkoszul/weights.hpp"

#include "qkoszul/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qkoszul {

namespace {

void check_rank(int a, int b, const char* what) {
    if (a != b) throw PreconditionError(std::string(what) + ": rank mismatch");
}

void check_index(int n, int r) {
    if (r < 1 || r > n) throw PreconditionError("weight index out of range");
}

}  // namespace

// ---------------------------------------------------------------- Weight

Weight Weight::epsilon(int n, int r) {
    check_index(n, r);
    Weight w(n);
    w[r] = 1;
    return w;
}

Weight Weight::root(int n, int r, int s) {
    check_index(n, r);
    check_index(n, s);
    if (r == s) throw PreconditionError("alpha_{rr} is not a root");
    Weight w(n);
    w[r] = 1;
    w[s] = -1;
    return w;
}

Weight Weight::rho(int n) {
    Weight w(n);
    for (int r = 1; r <= n; ++r) w[r] = n - r;
    return w;
}

Weight Weight::parse(const std::string& text) {
    std::vector<int> c;
    std::size_t pos = 0;
    const std::size_t len = text.size();
    auto skip_ws = [&] {
        while (pos < len && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == len) throw ParseError("empty weight", pos);
    while (true) {
        skip_ws();
        const std::size_t start = pos;
        if (pos < len && (text[pos] == '-' || text[pos] == '+')) ++pos;
        const std::size_t digits = pos;
        while (pos < len && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer coordinate", start);
        c.push_back(std::stoi(text.substr(start, pos - start)));
        skip_ws();
        if (pos == len) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    return Weight(std::move(c));
}

int dot(const Weight& a, const Weight& b) {
    check_rank(a.n(), b.n(), "dot");
    return std::inner_product(a.c_.begin(), a.c_.end(), b.c_.begin(), 0);
}

bool Weight::is_dominant() const {
    return std::is_sorted(c_.begin(), c_.end(), std::greater<>());
}

bool Weight::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

int Weight::total() const { return std::accumulate(c_.begin(), c_.end(), 0); }

Weight Weight::operator-() const {
    Weight w = *this;
    for (auto& x : w.c_) x = -x;
    return w;
}

Weight& Weight::operator+=(const Weight& o) {
    check_rank(n(), o.n(), "weight sum");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    check_rank(n(), o.n(), "weight difference");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Weight operator*(int k, Weight a) {
    for (auto& x : a.c_) x *= k;
    return a;
}

std::string Weight::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    return os.str();
}

// ---------------------------------------------------------------- WeylElt

WeylElt WeylElt::identity(int n) {
    WeylElt w;
    w.p_.resize(static_cast<std::size_t>(n));
    std::iota(w.p_.begin(), w.p_.end(), 0);
    return w;
}

WeylElt WeylElt::simple(int n, int i) {
    if (i < 1 || i >= n) throw PreconditionError("simple reflection index out of range");
    WeylElt w = identity(n);
    std::swap(w.p_[static_cast<std::size_t>(i - 1)], w.p_[static_cast<std::size_t>(i)]);
    return w;
}

WeylElt WeylElt::from_images(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(images.size(), false);
    WeylElt w;
    for (int x : images) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)])
            throw PreconditionError("not a permutation");
        seen[static_cast<std::size_t>(x - 1)] = true;
        w.p_.push_back(x - 1);
    }
    return w;
}

WeylElt WeylElt::from_word(int n, const std::vector<int>& word) {
    WeylElt w = identity(n);
    for (int i : word) w = w * simple(n, i);
    return w;
}

int WeylElt::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < p_.size(); ++i)
        for (std::size_t j = i + 1; j < p_.size(); ++j) inv += p_[i] > p_[j];
    return inv;
}

WeylElt WeylElt::inverse() const {
    WeylElt w;
    w.p_.resize(p_.size());
    for (std::size_t i = 0; i < p_.size(); ++i) w.p_[static_cast<std::size_t>(p_[i])] = static_cast<int>(i);
    return w;
}

Weight WeylElt::apply(const Weight& lambda) const {
    check_rank(n(), lambda.n(), "Weyl action");
    Weight out(n());
    for (int r = 1; r <= n(); ++r) out[(*this)(r)] = lambda[r];
    return out;
}

std::vector<int> WeylElt::reduced_word() const {
    // Bubble sort the one-line notation; each adjacent swap at position i peels
    // off s_i on the right.
    std::vector<int> p = p_;
    std::vector<int> word;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (p[i] > p[i + 1]) {
                std::swap(p[i], p[i + 1]);
                word.push_back(static_cast<int>(i) + 1);
                swapped = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

WeylElt operator*(const WeylElt& a, const WeylElt& b) {
    check_rank(a.n(), b.n(), "Weyl product");
    WeylElt c;
    c.p_.resize(a.p_.size());
    for (std::size_t r = 0; r < a.p_.size(); ++r) c.p_[r] = a.p_[static_cast<std::size_t>(b.p_[r])];
    return c;
}

std::string WeylElt::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < p_.size(); ++i) os << (i ? "," : "") << p_[i] + 1;
    os << ']';
    return os.str();
}

std::vector<WeylElt> weyl_group(int n) {
    if (n < 1) throw PreconditionError("weyl_group: n must be positive");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<WeylElt> out;
    do {
        out.push_back(WeylElt::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

// ---------------------------------------------------------------- dot action

Weight dot_action(const WeylElt& w, const Weight& lambda) {
    check_rank(w.n(), lambda.n(), "dot_action");
    const Weight rho = Weight::rho(lambda.n());
    return w.apply(lambda + rho) - rho;
}

std::optional<DominantConjugate> dominant_conjugate(const Weight& lambda) {
    const int n = lambda.n();
    const Weight shifted = lambda + Weight::rho(n);
    // Sort positions by decreasing coordinate; w sends the position holding the
    // k-th largest value to k.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return shifted[a] > shifted[b]; });
    for (int k = 1; k < n; ++k)
        if (shifted[order[static_cast<std::size_t>(k - 1)]] == shifted[order[static_cast<std::size_t>(k)]])
            return std::nullopt;
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) images[static_cast<std::size_t>(order[static_cast<std::size_t>(k - 1)] - 1)] = k;
    WeylElt w = WeylElt::from_images(images);
    return DominantConjugate{w, dot_action(w, lambda)};
}

// ---------------------------------------------------------------- Kostant sets

RootSubset positive_roots(int n) {
    RootSubset roots;
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s) roots.emplace_back(r, s);
    return roots;
}

Weight lambda_of(int n, const RootSubset& x) {
    Weight lambda(n);
    for (const auto& [r, s] : x) lambda -= Weight::root(n, r, s);
    return lambda;
}

std::vector<KostantEntry> kostant_sets(int n, int bound) {
    if (n < 1) throw PreconditionError("kostant_sets: n must be positive");
    if (n > bound) throw BoundExceeded("kostant_sets: n exceeds enumeration bound");
    const RootSubset roots = positive_roots(n);
    const std::vector<WeylElt> group = weyl_group(n);
    std::vector<KostantEntry> out;
    const std::size_t subsets = std::size_t{1} << roots.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        RootSubset x;
        for (std::size_t k = 0; k < roots.size(); ++k)
            if (mask >> k & 1U) x.push_back(roots[k]);
        const Weight lambda = lambda_of(n, x);
        std::vector<WeylElt> hits;
        for (const auto& w : group) {
            const Weight mu = dot_action(w, lambda);
            if (!mu.is_dominant()) continue;
            if (!mu.is_zero())
                throw std::logic_error("kostant_sets: W . lambda_X meets a nonzero dominant weight");
            hits.push_back(w);
        }
        if (hits.empty()) continue;
        if (hits.size() != 1) throw std::logic_error("kostant_sets: several w reach 0");
        const WeylElt& w = hits.front();
        RootSubset inverted;
        for (const auto& [r, s] : roots)
            if (w(r) > w(s)) inverted.emplace_back(r, s);
        if (inverted != x) throw std::logic_error("kostant_sets: X differs from the inversion set of w");
        out.push_back(KostantEntry{w, std::move(x)});
    }
    return out;
}

int coxeter_number(int n) {
    if (n < 2) throw PreconditionError("coxeter_number: n must be at least 2");
    const Weight rho = Weight::rho(n);
    int best = 0;
    for (const auto& [r, s] : positive_roots(n)) best = std::max(best, rho.pair_coroot(r, s));
    return best + 1;
}

}  // namespace qkoszul
