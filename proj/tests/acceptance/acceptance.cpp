// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include "qkoszul/invariants.hpp"
#include "qkoszul/koszul.hpp"
#include "qkoszul/suites.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace qkoszul;

namespace {

struct Outcome {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    void add(const SuiteReport& r) {
        checked += r.checked;
        for (const auto& f : r.failures) failures.push_back(r.suite + " n=" + std::to_string(r.n) + " " + r.field + ": " + f);
    }
    void check(bool ok, const std::string& what) {
        ++checked;
        if (!ok) failures.push_back(what);
    }
};

std::vector<Field> fields_for(int n) {
    return {Field::generic(), Field::root_of_unity(2 * n + 1), Field::root_of_unity(2 * n + 3)};
}

std::size_t binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<std::size_t>(a - b + i) / static_cast<std::size_t>(i);
    return r;
}

Outcome koszul_exactness() {
    Outcome o;
    for (int n = 2; n <= 4; ++n)
        for (const Field& f : fields_for(n)) {
            o.add(koszul_suite(n, f, 6));
            // Dimensions are binomial and the Euler characteristic vanishes.
            for (int d = 1; d <= 6; ++d) {
                const StrandHomology h = strand_homology(n, d, f);
                long chi = 0;
                for (int p = 0; p <= n; ++p) {
                    const std::size_t expected = p <= d ? binomial(n + d - p - 1, d - p) * binomial(n, p) : 0;
                    o.check(h.dims[static_cast<std::size_t>(p)] == expected, "dimension of S^{d-p} (x) /\\^p");
                    chi += (p % 2 ? -1 : 1) * static_cast<long>(h.dims[static_cast<std::size_t>(p)]);
                }
                o.check(chi == 0, "Euler characteristic n=" + std::to_string(n) + " d=" + std::to_string(d));
            }
        }
    return o;
}

Outcome differential_equivariance() {
    Outcome o;
    for (int n = 2; n <= 4; ++n)
        for (const Field& f : fields_for(n)) o.add(equivariance_suite(n, f, 6));
    return o;
}

Outcome pbw_crosscheck() {
    Outcome o;
    for (int n = 2; n <= 4; ++n) o.add(pbw_suite(n, Field::generic(), 6));
    return o;
}

Outcome relation_completeness() {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
        o.add(relations_suite(n, Field::generic()));
        o.add(relations_suite(n, Field::root_of_unity(2 * n + 1)));
    }
    return o;
}

Outcome bwb_tables() {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        o.add(bwb_suite(n, Field::generic()));
        o.add(bwb_suite(n, Field::root_of_unity(11)));
    }
    for (int n = 1; n <= 4; ++n) o.add(kostant_suite(n));
    return o;
}

Outcome drinfeld_pairing() {
    Outcome o;
    // 100 random pairs for each n, 200 in all.
    for (int n = 2; n <= 3; ++n) o.add(pairing_suite(n, Field::generic(), 5, 100, static_cast<std::uint64_t>(n)));
    return o;
}

Outcome invariant_freeness() {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
        const Field f = n % 2 ? Field::root_of_unity(2 * n + 1) : Field::generic();
        o.add(decompose_suite(n, f, 100, static_cast<std::uint64_t>(n)));
    }
    // z_1^2 = -sigma_2 + sigma_1 z_1 for n = 2.
    const Field g = Field::generic();
    auto chi = [&](int a, int b) { return GroupAlgebraElement::chi(Weight(std::vector<int>{a, b}), g); };
    const Decomposition d = decompose(chi(2, 0), 0, Twist::Untwisted);
    o.check(d.unique(), "n = 2 identity is not certified unique");
    o.check(d.f[0] == chi(1, 1).scaled(-g.one()), "f_0 != -sigma_2");
    o.check(d.f[1] == chi(1, 0) + chi(0, 1), "f_1 != sigma_1");
    return o;
}

Outcome property_suites() {
    Outcome o;
    for (std::uint64_t seed = 0; seed <= 4; ++seed) o.add(properties_suite(seed));
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "Koszul exactness, n <= 4, d <= 6, generic and zeta-orders 2n+1, 2n+3", koszul_exactness},
        {2, "d^2 = 0 and equivariance of the differential, same ranges", differential_equivariance},
        {3, "PBW counts = Serre quotient dimensions = Kostant counts, |beta| <= 6, n <= 4", pbw_crosscheck},
        {4, "quadratic relations on the V (x) V operator subalgebra, n <= 4", relation_completeness},
        {5, "step tables, wedge weight vanishing and Kostant sets", bwb_tables},
        {6, "Drinfeld pairing Gram ranks |beta| <= 5, n <= 3, and 200 anti-multiplicative pairs", drinfeld_pairing},
        {7, "twisted invariants decompose uniquely, 100 per n <= 4, and the n = 2 identity", invariant_freeness},
        {8, "property suites with seeds 0-4", property_suites},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        std::string error;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = error.empty() && o.failures.empty();
        failed += !ok;
        std::printf("criterion %d: %s  %s  (%zu checks, %.1f s)\n", c.id, ok ? "PASS" : "FAIL", c.name, o.checked, secs);
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) std::printf("    %s\n", o.failures[i].c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
