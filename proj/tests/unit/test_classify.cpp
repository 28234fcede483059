#include "doctest.h"

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "pslat/chain.hpp"
#include "pslat/classify.hpp"

using namespace pslat;
using namespace pslat::testing;

TEST_SUITE("classify") {

TEST_CASE("spectrum to X form") {
    const XState single = xstate_from_spectrum(to_vec8(unit_ray(1)));
    CHECK(single.a == std::array<Rat, 4>{Rat(1, 2), 0, 0, 0});
    CHECK(single.b == single.a);
    CHECK(single.c == std::array<Rat, 4>{Rat(1, 2), 0, 0, 0});

    const XState diag = xstate_from_spectrum(to_vec8(ray_of({1, 8})));
    CHECK(diag.a == std::array<Rat, 4>{1, 0, 0, 0});
    CHECK(diag.c == std::array<Rat, 4>{0, 0, 0, 0});

    const XState rho0 = xstate_from_spectrum(v8({2, 1, 0, 1, 1, 0, 1, 0}));
    CHECK(rho0.a == std::array<Rat, 4>{1, 1, 0, 1});
    CHECK(rho0.c == std::array<Rat, 4>{1, 0, 0, 0});
    CHECK(is_positive_state(rho0));
}

TEST_CASE("X form back to spectrum") {
    XState x;
    x.a = x.b = {1, 0, 0, 0};
    x.c = {1, 0, 0, 0};
    CHECK(spectrum_from_xstate(x) == 2 * unit_vec(1));

    XState mixed;
    mixed.a = mixed.b = {1, 1, 1, 1};
    CHECK(spectrum_from_xstate(mixed) == v8({1, 1, 1, 1, 1, 1, 1, 1}));

    XState lopsided;
    lopsided.a = {1, 0, 0, 0};
    lopsided.b = {0, 1, 0, 0};
    CHECK_THROWS_AS(spectrum_from_xstate(lopsided), NotGhzDiagonalError);
}

TEST_CASE("round trip through the X form is the identity") {
    std::mt19937_64 gen(61);
    for (int trial = 0; trial < 100; ++trial) {
        const Vec8 p = random_vec(gen);
        CHECK(spectrum_from_xstate(xstate_from_spectrum(p)) == p);
    }
}

TEST_CASE("negative spectra are flagged, not rejected, by the X form") {
    const XState w = xstate_from_spectrum(v8({0, 1, -1, 0, 0, 1, 1, 0}));
    CHECK_FALSE(is_positive_state(w));
    CHECK(is_ghz_diagonal(w));
}

TEST_CASE("the 18 profiled cones are fixed and ordered") {
    CHECK(profile_cone_names().size() == 18);
    CHECK(profile_cones().size() == 18);
    CHECK(profile_cone_names()[0] == "A");
    CHECK(profile_cone_names()[7] == "A&B&C");
    CHECK(profile_cone_names()[17] == "(A|B)&(B|C)&(C|A)");
}

TEST_CASE("diagonal rays profile all true") {
    for (const auto& d : delta_rays()) {
        const PSProfile profile = ps_profile(to_vec8(d));
        CHECK(profile.class_bits() == std::string(18, '1'));
        for (const auto& entry : profile.entries) CHECK(entry.member);
    }
}

TEST_CASE("a pure GHZ direction misses all three base cones") {
    const PSProfile profile = ps_profile(to_vec8(unit_ray(1)));
    CHECK_FALSE(profile.entries[0].member);  // A
    CHECK_FALSE(profile.entries[1].member);  // B
    CHECK_FALSE(profile.entries[2].member);  // C
}

TEST_CASE("rho_2 separates the distributivity pair") {
    const PSProfile profile = ps_profile(rho(2));
    bool inside_big = false, inside_small = true;
    for (const auto& entry : profile.entries) {
        if (entry.cone == "(A|B)&(A|C)") inside_big = entry.member;
    }
    const BaseCones& base = BaseCones::standard();
    inside_small = is_inside(member(rho(2), eval("A|(B&C)", base)));
    CHECK(inside_big);
    CHECK_FALSE(inside_small);
}

TEST_CASE("profiles respect the lattice order") {
    std::mt19937_64 gen(67);
    const auto& pairs = profile_order_pairs();
    CHECK(!pairs.empty());
    for (int trial = 0; trial < 100; ++trial) {
        const PSProfile profile = ps_profile(random_nonneg_vec(gen, 6));
        for (const auto& [i, j] : pairs)
            if (profile.entries[i].member) CHECK(profile.entries[j].member);
    }
}

TEST_CASE("profiles are scale invariant") {
    std::mt19937_64 gen(71);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec8 p = random_nonneg_vec(gen, 6);
        const Rat lambda = random_rat(gen, 1, 9);
        CHECK(ps_profile(p).class_bits() == ps_profile(lambda * p).class_bits());
    }
}

TEST_CASE("profile certificates re-verify") {
    const PSProfile profile = ps_profile(v8({2, 1, 0, 1, 1, 0, 1, 0}));
    const auto& cones = profile_cones();
    for (std::size_t i = 0; i < cones.size(); ++i)
        CHECK(verify(profile.state, profile.entries[i].certificate, cones[i]));
}

TEST_CASE("negative entries are rejected") {
    CHECK_THROWS_AS(ps_profile(v8({1, -1, 0, 0, 0, 0, 0, 0})), NegativeEntryError);
}

TEST_CASE("profile JSON exposes the class bit pattern") {
    const auto j = ps_profile(to_vec8(ray_of({1, 8}))).to_json();
    CHECK(j["class_bits"] == std::string(18, '1'));
    CHECK(j["profile"].size() == 18);
    CHECK(j["profile"][0]["cone"] == "A");
}

}  // TEST_SUITE
