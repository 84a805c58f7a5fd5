#include "qkoszul/suites.hpp"

#include "qkoszul/cohomology.hpp"
#include "qkoszul/errors.hpp"
#include "qkoszul/invariants.hpp"
#include "qkoszul/koszul.hpp"
#include "qkoszul/qalgebra.hpp"
#include "qkoszul/qmatrix.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qkoszul {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Scalar random_scalar(Rng& rng, Field f) {
    Scalar s = f.zero();
    for (int k = 0; k < 3; ++k) s += f.from_int(uniform(rng, -4, 4)) * f.zeta_pow(uniform(rng, -3, 3));
    return s;
}

Scalar random_nonzero(Rng& rng, Field f) {
    for (;;) {
        Scalar s = random_scalar(rng, f);
        if (!s.is_zero()) return s;
    }
}

SuiteReport start(std::string name, int n, Field field) {
    SuiteReport r;
    r.suite = std::move(name);
    r.n = n;
    r.field = field.describe();
    return r;
}

// Multiplicity vectors over the simple roots with 1 <= size <= bound.
std::vector<std::vector<int>> degrees(int n, int bound) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 1; i < n; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& v : out) {
            int used = 0;
            for (int x : v) used += x;
            for (int k = 0; used + k <= bound; ++k) {
                next.push_back(v);
                next.back().push_back(k);
            }
        }
        out = std::move(next);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }); }),
              out.end());
    return out;
}

Weight beta_of(int n, const std::vector<int>& m) {
    Weight b(n);
    for (int i = 1; i < n; ++i) b += m[static_cast<std::size_t>(i - 1)] * Weight::simple_root(n, i);
    return b;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

NCPoly random_homogeneous(Rng& rng, int n, Field f, const std::vector<int>& counts) {
    Word w;
    for (int i = 1; i < n; ++i) w.insert(w.end(), static_cast<std::size_t>(counts[static_cast<std::size_t>(i - 1)]), i);
    NCPoly p(n, Alphabet::F, f);
    const int terms = uniform(rng, 1, 3);
    for (int k = 0; k < terms; ++k) {
        std::shuffle(w.begin(), w.end(), rng);
        p.add_term(w, random_nonzero(rng, f));
    }
    return p;
}

XiMonomial random_word(Rng& rng, int n, int len, bool tilde) {
    XiMonomial m;
    for (int k = 0; k < len; ++k) {
        if (tilde) {
            const int r = uniform(rng, 1, n - 1);
            m.emplace_back(r, uniform(rng, r + 1, n));
        } else {
            m.emplace_back(uniform(rng, 1, n), uniform(rng, 1, n));
        }
    }
    return m;
}

void require_rank(int n) {
    if (n < 2) throw PreconditionError("suite needs n >= 2");
}

}  // namespace

SuiteReport relations_suite(int n, Field field) {
    require_rank(n);
    SuiteReport out = start("relations", n, field);
    const RelationReport r = verify_relations(n, field);
    for (const auto& [family, count] : r.checked) {
        out.checked += count;
        out.facts.emplace_back(family, std::to_string(count));
    }
    out.facts.emplace_back("subalgebra_dim", std::to_string(r.subalgebra_dim));
    out.facts.emplace_back("row_one_commutation", r.row_one_commutation ? "pass" : "fail");
    for (const auto& v : r.violations) out.failures.push_back(v.family + ": " + v.relation + " on " + v.witness);
    if (!r.row_one_commutation) out.failures.push_back("row one q-commutation");
    return out;
}

SuiteReport pairing_suite(int n, Field field, int degree_bound, int pairs, std::uint64_t seed) {
    require_rank(n);
    SuiteReport out = start("pairing", n, field);
    if (field.is_generic()) {
        std::size_t full = 0;
        for (const auto& m : degrees(n, degree_bound)) {
            const Weight beta = beta_of(n, m);
            const std::size_t dim = graded_basis(n, beta, Alphabet::E, field, degree_bound).dim();
            const std::size_t rank = pairing_gram_rank(n, beta, field, degree_bound);
            ++out.checked;
            if (rank == dim) ++full;
            else out.failures.push_back("Gram rank " + std::to_string(rank) + " < " + std::to_string(dim) + " at beta = " + join(m));
        }
        out.facts.emplace_back("gram_full_rank", std::to_string(full));
    }
    Rng rng(seed);
    for (int trial = 0; trial < pairs; ++trial) {
        std::vector<int> a(static_cast<std::size_t>(n - 1)), b(a.size());
        int size = 0;
        do {
            size = 0;
            for (auto& x : a) size += x = uniform(rng, 0, 2);
            for (auto& x : b) size += x = uniform(rng, 0, 1);
        } while (size == 0 || size > 4);
        const NCPoly y = random_homogeneous(rng, n, field, a);
        const NCPoly y2 = random_homogeneous(rng, n, field, b);
        const Functional lhs = dual_map_F(y * y2);
        ++out.checked;
        if (!(lhs == dual_product(dual_map_F(y2), dual_map_F(y), lhs.piece())))
            out.failures.push_back("F(y y') != F(y') F(y) for y = " + y.to_string() + ", y' = " + y2.to_string());
    }
    out.facts.emplace_back("anti_multiplicative_pairs", std::to_string(pairs));
    return out;
}

SuiteReport equivariance_suite(int n, Field field, int degree_bound) {
    require_rank(n);
    SuiteReport out = start("equivariance", n, field);
    for (int d = 1; d <= degree_bound; ++d) {
        const EquivarianceReport r = equivariance_check(n, d, field);
        out.checked += r.checked;
        if (!r.square_zero) out.failures.push_back("d^2 != 0 on strand " + std::to_string(d));
        for (const auto& f : r.failures)
            out.failures.push_back(f.generator + " does not commute with " + f.map + " on strand " + std::to_string(d));
    }
    return out;
}

SuiteReport pbw_suite(int n, Field field, int degree_bound) {
    require_rank(n);
    SuiteReport out = start("pbw", n, field);
    for (const auto& m : degrees(n, degree_bound)) {
        const Weight beta = beta_of(n, m);
        const PbwCrosscheck c = pbw_count_crosscheck(n, beta, field, degree_bound);
        const std::uint64_t k = kostant_partition_count(beta);
        ++out.checked;
        if (c.count != k || c.dim != k || c.span != k) {
            std::ostringstream os;
            os << "beta = " << join(m) << ": ordered " << c.count << ", quotient " << c.dim << ", span " << c.span
               << ", kostant " << k;
            out.failures.push_back(os.str());
        }
    }
    return out;
}

SuiteReport kostant_suite(int n) {
    SuiteReport out = start("kostant", n, Field::generic());
    const auto sets = kostant_sets(n);
    std::size_t factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= static_cast<std::size_t>(k);
    out.facts.emplace_back("sets", std::to_string(sets.size()));
    if (sets.size() != factorial)
        out.failures.push_back(std::to_string(sets.size()) + " sets, expected " + std::to_string(factorial));
    for (const auto& e : sets) {
        ++out.checked;
        const CohomologyAnswer a = bwb(lambda_of(n, e.x), Field::generic());
        if (!(a == CohomologyAnswer{false, e.w.length(), Weight(n), 1}))
            out.failures.push_back("w = " + e.w.to_string() + ": " + a.to_string());
    }
    return out;
}

SuiteReport koszul_suite(int n, Field field, int degree_bound) {
    require_rank(n);
    SuiteReport out = start("koszul", n, field);
    for (int d = 1; d <= degree_bound; ++d) {
        const StrandHomology h = strand_homology(n, d, field);
        ++out.checked;
        if (!h.exact()) {
            std::string b;
            for (auto x : h.betti) b += (b.empty() ? "" : ",") + std::to_string(x);
            out.failures.push_back("strand " + std::to_string(d) + " has betti (" + b + ")");
        }
    }
    return out;
}

SuiteReport bwb_suite(int n, Field field) {
    SuiteReport out = start("bwb", n, field);
    for (int a = 0; a < n; ++a) {
        const StepTable t = step_lemma_table(n, a, field);
        out.checked += t.rows.size();
        if (!t.unique_survivor()) out.failures.push_back("step table a = " + std::to_string(a));
        for (int k = 0; k < a; ++k) {
            const WedgeVanishing w = wedge_weight_vanishing(n, a, k, field);
            out.checked += w.rows.size();
            if (!w.all_vanish()) out.failures.push_back("wedge weights a = " + std::to_string(a) + ", k = " + std::to_string(k));
        }
    }
    return out;
}

SuiteReport decompose_suite(int n, Field field, int trials, std::uint64_t seed) {
    require_rank(n);
    SuiteReport out = start("decompose", n, field);
    Rng rng(seed);
    const Parabolic j = stabilizer_of_first(n);
    for (int trial = 0; trial < trials; ++trial) {
        GroupAlgebraElement g(n, field);
        const int terms = uniform(rng, 1, 3);
        for (int t = 0; t < terms; ++t) {
            Weight l(n);
            for (int r = 1; r <= n; ++r) l[r] = uniform(rng, -1, 1);
            g += orbit_invariant_basis(l, j, field)->scaled(random_nonzero(rng, field));
        }
        const Decomposition d = decompose(g);
        ++out.checked;
        bool invariant = true;
        for (const auto& fa : d.f) invariant = invariant && is_invariant(fa, full_weyl(n));
        if (!d.unique()) out.failures.push_back("rank " + std::to_string(d.rank) + " < " + std::to_string(d.unknowns) + " for " + g.to_string());
        if (!(recompose(d.f) == g)) out.failures.push_back("recompose differs for " + g.to_string());
        if (!invariant) out.failures.push_back("non-invariant component for " + g.to_string());
    }
    return out;
}

SuiteReport properties_suite(std::uint64_t seed) {
    SuiteReport out = start("properties", 0, Field::generic());
    out.field = "generic and roots of unity";
    Rng rng(seed);
    auto check = [&](bool ok, const std::string& what) {
        ++out.checked;
        if (!ok) out.failures.push_back(what);
    };

    const Field z9 = Field::root_of_unity(9);
    for (int trial = 0; trial < 30; ++trial) {
        const Field f = trial % 2 ? z9 : Field::generic();
        const int n = uniform(rng, 2, 4);
        const int len = uniform(rng, 0, 8);
        for (const bool tilde : {false, true}) {
            const XiPoly p = XiPoly::monomial(f, tilde, random_word(rng, n, len, tilde), f.one());
            auto nf = tilde ? tilde_normal_form : xi_normal_form;
            const XiPoly left = nf(p, Strategy::Leftmost);
            check(left == nf(p, Strategy::Rightmost), "confluence: " + p.to_string());
            check(nf(left, Strategy::Leftmost) == left, "idempotence: " + p.to_string());
        }
    }

    for (int trial = 0; trial < 50; ++trial) {
        const int n = uniform(rng, 2, 5);
        const auto all = weyl_group(n);
        const auto pick = [&] { return all[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))]; };
        const WeylElt a = pick(), b = pick();
        Weight l(n);
        for (int r = 1; r <= n; ++r) l[r] = uniform(rng, -3, 3);
        check((a * b).apply(l) == a.apply(b.apply(l)), "linear action law at " + l.to_string());
        check(dot_action(a * b, l) == dot_action(a, dot_action(b, l)), "dot action law at " + l.to_string());
        check(WeylElt::from_word(n, a.reduced_word()) == a && static_cast<int>(a.reduced_word().size()) == a.length(),
              "reduced word of " + a.to_string());
        const Field f = trial % 2 ? z9 : Field::generic();
        GroupAlgebraElement x(n, f);
        for (int t = 0; t < 3; ++t) {
            Weight m(n);
            for (int r = 1; r <= n; ++r) m[r] = uniform(rng, -2, 2);
            x.add_term(m, random_scalar(rng, f));
        }
        check(twisted_action(a * b, x) == twisted_action(a, twisted_action(b, x)), "twisted action law on " + x.to_string());
    }

    for (int trial = 0; trial < 60; ++trial) {
        const Field f = trial % 3 == 0 ? Field::generic() : Field::root_of_unity(uniform(rng, 3, 16));
        const Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
        const std::string where = " in " + f.describe();
        check((a + b) + c == a + (b + c) && a + b == b + a, "additive laws" + where);
        check((a * b) * c == a * (b * c) && a * b == b * a, "multiplicative laws" + where);
        check(a * (b + c) == a * b + a * c, "distributivity" + where);
        check(a + f.zero() == a && a * f.one() == a && (a - a).is_zero(), "identities" + where);
        if (!a.is_zero()) check((a * a.inverse()).is_one(), "inverse of " + a.to_string() + where);
    }

    const Field g = Field::generic();
    for (int trial = 0; trial < 60; ++trial) {
        const int order = uniform(rng, 3, 16);
        Scalar a = random_scalar(rng, g), b = random_scalar(rng, g);
        if (trial % 2 && !b.is_zero()) a = a / b;
        Scalar sa, sb;
        try {
            sa = specialize(a, order);
            sb = specialize(b, order);
        } catch (const std::domain_error&) {
            continue;
        }
        check(specialize(a + b, order) == sa + sb && specialize(a * b, order) == sa * sb,
              "specialization at order " + std::to_string(order) + " of " + a.to_string() + ", " + b.to_string());
        check(specialize(g.zeta(), order) == Field::root_of_unity(order).zeta(), "q maps to z");
    }
    return out;
}

std::vector<std::string> suite_names() {
    return {"relations", "pairing", "equivariance", "pbw", "kostant", "koszul", "bwb", "decompose", "properties"};
}

SuiteReport run_suite(const std::string& name, int n, Field field, int degree_bound, std::uint64_t seed) {
    if (name == "relations") return relations_suite(n, field);
    if (name == "pairing") return pairing_suite(n, field, std::min(degree_bound, 5), 200, seed);
    if (name == "equivariance") return equivariance_suite(n, field, degree_bound);
    if (name == "pbw") return pbw_suite(n, field, degree_bound);
    if (name == "kostant") return kostant_suite(n);
    if (name == "koszul") return koszul_suite(n, field, degree_bound);
    if (name == "bwb") return bwb_suite(n, field);
    if (name == "decompose") return decompose_suite(n, field, 100, seed);
    if (name == "properties") return properties_suite(seed);
    std::string known;
    for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
    throw PreconditionError("unknown suite '" + name + "' (known: " + known + ")");
}

}  // namespace qkoszul
