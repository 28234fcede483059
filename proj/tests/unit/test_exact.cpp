#include "doctest.h"

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "pslat/rational.hpp"

using namespace pslat;
using namespace pslat::testing;

TEST_SUITE("exact") {

TEST_CASE("pairing on fixed vectors") {
    const Vec8 p = v8({2, 1, 0, 1, 1, 0, 1, 0});
    const Vec8 q = v8({0, 1, -1, 0, 0, 1, 1, 0});
    CHECK(pairing(p, q) == 2);
    CHECK(pairing(p, Vec8{}) == 0);

    // <W_0, rho_1> from the chain construction.
    const Vec8 rho1 = v8({4, 5, 8, 3, 5, 0, 1, 0});
    CHECK(pairing(rho1, q) == -2);
}

TEST_CASE("pairing is bilinear and symmetric") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Vec8 p = random_vec(gen);
        const Vec8 p2 = random_vec(gen);
        const Vec8 q = random_vec(gen);
        const Rat s = random_rat(gen);
        CHECK(pairing(p, q) == pairing(q, p));
        CHECK(pairing(p + p2, q) == pairing(p, q) + pairing(p2, q));
        CHECK(pairing(s * p, q) == s * pairing(p, q));
    }
}

TEST_CASE("normalize_ray canonicalizes scale") {
    Vec8 halves{};
    halves[0] = Rat(1, 2);
    halves[7] = Rat(1, 2);
    CHECK(normalize_ray(halves) == r8({1, 0, 0, 0, 0, 0, 0, 1}));

    CHECK(normalize_ray(v8({3, 0, 0, 3, 0, 0, 0, 0})) == r8({1, 0, 0, 1, 0, 0, 0, 0}));
    CHECK(normalize_ray(v8({0, 2, -2, 0, 0, 2, 2, 0})) == r8({0, 1, -1, 0, 0, 1, 1, 0}));
    CHECK_THROWS_AS(normalize_ray(Vec8{}), ZeroVectorError);
}

TEST_CASE("normalize_ray is idempotent and scale invariant") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        Vec8 v = random_vec(gen);
        if (is_zero(v)) continue;
        const Ray r = normalize_ray(v);
        CHECK(normalize_ray(to_vec8(r)) == r);
        Rat lambda = random_rat(gen, 1, 9);  // positive
        CHECK(normalize_ray(lambda * v) == r);
    }
}

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK(to_string(parse_rational("-12")) == "-12");
    CHECK(parse_rational("123456789123456789123456789") ==
          Rat(Int("123456789123456789123456789")));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("vector JSON round trip is exact") {
    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Vec8 v = random_vec(gen, -1000, 1000);
        CHECK(vec8_from_json(vec8_to_json(v)) == v);
    }
    Vec8 big{};
    big[0] = Rat(Int("987654321987654321987654321"), Int("13"));
    big[3] = Rat(-7, 5);
    const auto j = vec8_to_json(big);
    CHECK(j[0].get<std::string>() == "987654321987654321987654321/13");
    CHECK(vec8_from_json(j) == big);
}

}  // TEST_SUITE
