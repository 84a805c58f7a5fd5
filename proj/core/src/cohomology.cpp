#include "qkoszul/cohomology.hpp"

#include "qkoszul/errors.hpp"

#include <gmpxx.h>

#include <cstdlib>

namespace qkoszul {

namespace {

// Subsets of size k of {lo, ..., n}, increasing.
void tuples(int lo, int n, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int j = cur.empty() ? lo : cur.back() + 1; j <= n; ++j) {
        cur.push_back(j);
        tuples(lo, n, k, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    tuples(2, n, k, cur, out);
    return out;
}

void require_ell(int n, Field field) {
    if (!field.is_generic() && field.ell() < n)
        throw OutOfValidatedRange("needs ell >= n at a root of unity (ell = " + std::to_string(field.ell()) + ")");
}

}  // namespace

std::string CohomologyAnswer::to_string() const {
    if (vanishes) return "vanishes";
    return "H^" + std::to_string(degree) + " = V*(" + mu.to_string() + "), dim " + std::to_string(dim);
}

std::uint64_t weyl_dimension(const Weight& mu) {
    if (!mu.is_dominant()) throw PreconditionError("weyl_dimension: weight " + mu.to_string() + " is not dominant");
    const int n = mu.n();
    mpz_class num = 1, den = 1;
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s) {
            num *= mu[r] - mu[s] + (s - r);
            den *= s - r;
        }
    const mpz_class dim = num / den;
    if (!dim.fits_ulong_p()) throw BoundExceeded("weyl_dimension does not fit in 64 bits");
    return dim.get_ui();
}

CohomologyAnswer bwb(const Weight& lambda, Field field) {
    const int n = lambda.n();
    if (!field.is_generic()) {
        const Weight shifted = lambda + Weight::rho(n);
        for (int r = 1; r <= n; ++r)
            for (int s = r + 1; s <= n; ++s)
                if (std::abs(shifted.pair_coroot(r, s)) > field.ell())
                    throw OutOfValidatedRange("|<lambda+rho, alpha_" + std::to_string(r) + std::to_string(s) +
                                              "^vee>| > ell for lambda = " + lambda.to_string());
    }
    const auto dc = dominant_conjugate(lambda);
    if (!dc) return CohomologyAnswer::zero();
    return {false, dc->w.length(), dc->mu, weyl_dimension(dc->mu)};
}

bool StepTable::unique_survivor() const {
    std::vector<int> survivor;
    for (int j = 2; j <= a + 1; ++j) survivor.push_back(j);
    for (const auto& row : rows) {
        const bool expected = row.j == survivor;
        if (row.result.vanishes == expected) return false;
        if (expected && !(row.result == CohomologyAnswer{false, a, Weight(n), 1})) return false;
    }
    return true;
}

StepTable step_lemma_table(int n, int a, Field field) {
    if (a < 0 || a > n - 1) throw PreconditionError("step_lemma_table: need 0 <= a <= n-1");
    require_ell(n, field);
    StepTable table;
    table.n = n;
    table.a = a;
    for (const auto& j : tuples(n, a)) {
        Weight lambda(n);
        for (int s : j) lambda -= Weight::root(n, 1, s);
        table.rows.push_back({j, lambda, bwb(lambda, field)});
    }
    return table;
}

bool WedgeVanishing::all_vanish() const {
    for (const auto& row : rows)
        if (!row.result.vanishes) return false;
    return true;
}

WedgeVanishing wedge_weight_vanishing(int n, int a, int k, Field field) {
    if (!(0 <= k && k < a && a < n)) throw PreconditionError("wedge_weight_vanishing: need 0 <= k < a < n");
    require_ell(n, field);
    WedgeVanishing out;
    out.n = n;
    out.a = a;
    out.k = k;
    for (const auto& j : tuples(n, k)) {
        Weight lambda = -(a - k) * Weight::epsilon(n, 1);
        for (int s : j) lambda -= Weight::root(n, 1, s);
        out.rows.push_back({j, lambda, bwb(lambda, field)});
    }
    return out;
}

}  // namespace qkoszul
