#pragma once

// Named verification suites shared by the command line tool and the acceptance
// driver. Each suite runs a family of exact checks over a fixed range and
// collects human-readable witnesses for anything that fails.

#include "qkoszul/scalar.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qkoszul {

struct SuiteReport {
    std::string suite;
    int n = 0;
    std::string field;
    std::size_t checked = 0;
    std::vector<std::pair<std::string, std::string>> facts;  // regression values worth printing
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// The four relation families and row-one q-commutation on the V (x) V subalgebra.
SuiteReport relations_suite(int n, Field field);

/// Gram matrices of tau full rank for 1 <= |beta| <= degree_bound (generic mode only),
/// and F(y y') = F(y') F(y) on `pairs` random homogeneous pairs.
SuiteReport pairing_suite(int n, Field field, int degree_bound = 5, int pairs = 200, std::uint64_t seed = 0);

/// d^2 = 0 and M(g) d = d M(g) on every strand 1 <= d <= degree_bound.
SuiteReport equivariance_suite(int n, Field field, int degree_bound = 6);

/// Ordered xt-monomial counts = Serre quotient dimensions = Kostant partition counts
/// for 1 <= |beta| <= degree_bound.
SuiteReport pbw_suite(int n, Field field, int degree_bound = 6);

/// Exactly n! Kostant sets, each with bwb(lambda_X) in degree l(w) with value K.
SuiteReport kostant_suite(int n);

/// Zero homology on every strand 1 <= d <= degree_bound.
SuiteReport koszul_suite(int n, Field field, int degree_bound = 6);

/// Step tables for every a have the unique survivor; every wedge weight vanishes.
SuiteReport bwb_suite(int n, Field field);

/// Random twisted W_J-invariants decompose uniquely in the default box and recompose.
SuiteReport decompose_suite(int n, Field field, int trials = 100, std::uint64_t seed = 0);

/// Seeded property checks: rewriting confluence, Weyl group action laws, field
/// axioms and the specialization homomorphism.
SuiteReport properties_suite(std::uint64_t seed);

/// Names accepted by run_suite.
std::vector<std::string> suite_names();

/// Dispatches by name. PreconditionError for an unknown name.
SuiteReport run_suite(const std::string& name, int n, Field field, int degree_bound, std::uint64_t seed);

}  // namespace qkoszul
