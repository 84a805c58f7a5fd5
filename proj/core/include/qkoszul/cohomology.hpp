#pragma once

// Induction of one-dimensional modules from the Borel: the Borel-Weil-Bott rule
// and the weight tables used in the vanishing arguments.

#include "qkoszul/scalar.hpp"
#include "qkoszul/weights.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qkoszul {

/// Either every R^i vanishes, or R^degree = V*(mu) of dimension dim and all others vanish.
struct CohomologyAnswer {
    bool vanishes = true;
    int degree = 0;
    Weight mu;
    std::uint64_t dim = 0;

    static CohomologyAnswer zero() { return {}; }
    /// "vanishes" or "H^1 = V*(0,0), dim 1".
    std::string to_string() const;
    friend bool operator==(const CohomologyAnswer&, const CohomologyAnswer&) = default;
};

/// prod_{r<s} <mu + rho, alpha_rs^vee> / <rho, alpha_rs^vee>. mu must be dominant.
std::uint64_t weyl_dimension(const Weight& mu);

/// R Ind(K_lambda). At a root of unity, requires |<lambda + rho, alpha^vee>| <= ell for
/// every positive root; throws OutOfValidatedRange otherwise.
CohomologyAnswer bwb(const Weight& lambda, Field field);

struct TupleResult {
    std::vector<int> j;
    Weight lambda;
    CohomologyAnswer result;
};

struct StepTable {
    int n = 0;
    int a = 0;
    std::vector<TupleResult> rows;
    /// Exactly the tuple (2, ..., a+1) survives, with answer (a, 0, 1).
    bool unique_survivor() const;
};

/// bwb(-(alpha_{1 j_1} + ... + alpha_{1 j_a})) for all 2 <= j_1 < ... < j_a <= n.
StepTable step_lemma_table(int n, int a, Field field);

struct WedgeVanishing {
    int n = 0;
    int a = 0;
    int k = 0;
    std::vector<TupleResult> rows;
    bool all_vanish() const;
};

/// bwb(-(a-k) eps_1 - alpha_{1 j_1} - ... - alpha_{1 j_k}) for all 2 <= j_1 < ... < j_k <= n,
/// 0 <= k < a < n.
WedgeVanishing wedge_weight_vanishing(int n, int a, int k, Field field);

}  // namespace qkoszul
