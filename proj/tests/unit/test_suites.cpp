#include "qkoszul/errors.hpp"
#include "qkoszul/suites.hpp"

#include <doctest.h>

using namespace qkoszul;

TEST_CASE("small suites pass") {
    const Field g = Field::generic();
    for (const auto& name : {"relations", "pairing", "equivariance", "pbw", "kostant", "koszul", "bwb"}) {
        const SuiteReport r = run_suite(name, 2, g, 3, 0);
        CHECK_MESSAGE(r.ok(), name);
        CHECK(r.checked > 0);
        CHECK(r.suite == name);
    }
    CHECK(properties_suite(0).ok());
    CHECK(decompose_suite(2, Field::root_of_unity(5), 5, 1).ok());
}

TEST_CASE("suite facts") {
    const SuiteReport k = kostant_suite(3);
    REQUIRE(k.facts.size() == 1);
    CHECK(k.facts[0] == std::pair<std::string, std::string>{"sets", "6"});
    const SuiteReport p = pairing_suite(2, Field::generic(), 3, 4, 0);
    CHECK(p.checked == 3 + 4);
}

TEST_CASE("suite errors") {
    CHECK_THROWS_AS(run_suite("nope", 2, Field::generic(), 3, 0), PreconditionError);
    CHECK_THROWS_AS(relations_suite(1, Field::generic()), PreconditionError);
    CHECK_THROWS_AS(bwb_suite(4, Field::root_of_unity(6)), OutOfValidatedRange);
    CHECK(suite_names().size() == 9);
}
