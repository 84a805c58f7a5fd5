#include "qkoszul/errors.hpp"
#include "qkoszul/parse.hpp"

#include "../support/random.hpp"

#include <doctest.h>

using namespace qkoszul;
using qkoszul::testing::Rng;

namespace {

std::size_t error_position(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.position();
    }
    return std::string::npos;
}

}  // namespace

TEST_CASE("scalar syntax") {
    const Field g = Field::generic();
    const Scalar q = g.zeta();
    CHECK(parse_scalar("q - q^-1", g) == q - q.inverse());
    CHECK(parse_scalar("3/2*q^2", g) == g.from_rational(mpq_class(3, 2)) * q * q);
    CHECK(parse_scalar("2 q", g) == g.from_int(2) * q);
    CHECK(parse_scalar("(q^2 - 1)/(q + 1)", g) == q - g.one());
    CHECK(parse_scalar("-q^2", g) == -(q * q));
    CHECK(parse_scalar("q \xE2\x88\x92 1", g) == q - g.one());
    const Field z7 = Field::root_of_unity(7);
    CHECK(parse_scalar("z^7", z7).is_one());
}

TEST_CASE("scalar round trips") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Rng rng(seed);
        for (const Field f : {Field::generic(), Field::root_of_unity(9), Field::root_of_unity(10)})
            for (int trial = 0; trial < 40; ++trial) {
                const Scalar s = qkoszul::testing::random_scalar(rng, f);
                CHECK_MESSAGE(parse_scalar(s.to_string(), f) == s, s.to_string());
            }
    }
}

TEST_CASE("scalar errors") {
    const Field g = Field::generic();
    CHECK(error_position([&] { parse_scalar("q + ", g); }) == 4);
    CHECK(error_position([&] { parse_scalar("(q", g); }) == 2);
    CHECK(error_position([&] { parse_scalar("q ^ x", g); }) == 4);
    CHECK(error_position([&] { parse_scalar("1/(q - q)", g); }) == 2);
    CHECK(error_position([&] { parse_scalar("w", g); }) == 0);
    CHECK(error_position([&] { parse_scalar("", g); }) == 0);
    CHECK_THROWS_AS(parse_scalar("z", g), ModeMismatch);
    CHECK_THROWS_AS(parse_scalar("q", Field::root_of_unity(5)), ModeMismatch);
}

TEST_CASE("xi syntax") {
    const Field z7 = Field::root_of_unity(7);
    const XiPoly p = parse_xi("xt[1,2] xt[2,3]", z7, 3);
    CHECK(p.tilde());
    CHECK(tilde_normal_form(p).to_string() == "(z - z^-1) xt[1,3] + z^-1 xt[2,3] xt[1,2]");
    const Field g = Field::generic();
    CHECK(xi_normal_form(parse_xi("x[2,2] x[1,1]", g)).to_string() == "x[1,1] x[2,2] - (q - q^-1) x[1,2] x[2,1]");
    CHECK(parse_xi("x[1,1]", g).to_string() == "x[1,1]");
    CHECK(parse_xi("2 * x[1,1] - 2 x[1,1]", g).is_zero());
    CHECK(parse_xi("q^2", g).terms().count(XiMonomial{}) == 1);
    CHECK(error_position([&] { parse_xi("x[1,1] xt[1,2]", g); }) == 7);
    CHECK(error_position([&] { parse_xi("x[1,4]", g, 3); }) == 4);
    CHECK(error_position([&] { parse_xi("x[1,1] x[1,2", g); }) == 12);
    CHECK(error_position([&] { parse_xi("xt[2,1]", g); }) == 3);
    CHECK(error_position([&] { parse_xi("q *", g); }) == 3);
    CHECK(error_position([&] { parse_xi("x[1,1] 3", g); }) == 7);
}

TEST_CASE("xi round trips") {
    Rng rng(4);
    for (const Field f : {Field::generic(), Field::root_of_unity(11)})
        for (int trial = 0; trial < 30; ++trial) {
            const int n = static_cast<int>(qkoszul::testing::uniform(rng, 2, 4));
            const bool tilde = trial % 2;
            XiPoly p(f, tilde);
            for (int t = 0; t < 3; ++t) {
                XiMonomial m;
                const int len = static_cast<int>(qkoszul::testing::uniform(rng, 0, 3));
                for (int k = 0; k < len; ++k) {
                    int r = static_cast<int>(qkoszul::testing::uniform(rng, 1, n));
                    int s = static_cast<int>(qkoszul::testing::uniform(rng, 1, n));
                    if (tilde && r == s) continue;
                    if (tilde && r > s) std::swap(r, s);
                    m.emplace_back(r, s);
                }
                p.add_term(m, qkoszul::testing::random_scalar(rng, f));
            }
            if (p.is_zero()) continue;
            const XiPoly back = parse_xi(p.to_string(), f, n);
            if (p.terms().size() > 1 || !p.terms().begin()->first.empty()) CHECK(back.tilde() == tilde);
            CHECK_MESSAGE(back.terms() == p.terms(), p.to_string());
        }
}

TEST_CASE("group element syntax") {
    const Field z7 = Field::root_of_unity(7);
    const auto x = parse_group_element("(z - z^-1) * chi[1,0] - chi[0,1]", z7);
    CHECK(x.to_string() == "(z - z^-1) * chi[1,0] - chi[0,1]");
    CHECK(x.n() == 2);
    const Field g = Field::generic();
    CHECK(parse_group_element("chi[1,0] chi[0,1] + 2", g) ==
          GroupAlgebraElement::chi(Weight(std::vector<int>{1, 1}), g) + GroupAlgebraElement::chi(Weight(2), g.from_int(2)));
    CHECK(error_position([&] { parse_group_element("chi[1,0] + chi[1,0,0]", g); }) == 15);
    CHECK(error_position([&] { parse_group_element("3", g); }) == 0);
    CHECK(error_position([&] { parse_group_element("x[1,1]", g); }) == 0);

    Rng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const Field f = trial % 2 ? z7 : g;
        GroupAlgebraElement e(3, f);
        for (int t = 0; t < 3; ++t) {
            Weight l(3);
            for (int r = 1; r <= 3; ++r) l[r] = static_cast<int>(qkoszul::testing::uniform(rng, -3, 3));
            e.add_term(l, qkoszul::testing::random_scalar(rng, f));
        }
        if (e.is_zero()) continue;
        CHECK_MESSAGE(parse_group_element(e.to_string(), f) == e, e.to_string());
    }
}
