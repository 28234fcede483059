// Acceptance suite: one verdict line per criterion, nonzero exit on any
// failure. Budgets are wall-clock seconds and are enforced, not advisory.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../unit/helpers.hpp"
#include "pslat/chain.hpp"
#include "pslat/classify.hpp"
#include "pslat/dd.hpp"
#include "pslat/lattice.hpp"

using namespace pslat;
using namespace pslat::testing;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void()> body;  // throws on failure
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

Cone materialized_dual(const Cone& c) {
    return dd_convert(Cone::from_inequalities(dd_convert(c).generators()));
}

void criterion_base_cross_check() {
    for (Atom a : {Atom::A, Atom::B, Atom::C}) {
        const Cone cone = dd_convert(Cone::from_generators(base_generators(a)));
        require(cone.generators() == dd::canonicalize_generators(base_generators(a)),
                "generator set differs from the table");
        require(cone.generators().size() == 12, "expected 12 extreme rays");
        require(cone.facets() == dd::canonicalize_generators(base_dual_generators(a)),
                "facet set differs from the dual table");
        require(cone.facets().size() == 16, "expected 16 facets");
        const Cone back = dd_convert(Cone::from_inequalities(base_dual_generators(a)));
        require(back.generators() == cone.generators(), "dual direction disagrees");
    }
}

void criterion_pairing_identity() {
    for (long n = 0; n <= 100; ++n)
        require(pairing(witness(n), rho(n + 1)) == -2, "pairing != -2 at n=" + std::to_string(n));
}

void criterion_induction_replays() {
    const InductionReport state = replay_state_induction(100);
    const InductionReport wit = replay_witness_induction(100);
    require(state.all_ok(), "state induction replay failed");
    require(wit.all_ok(), "witness induction replay failed");
    require(state.state_membership_ok.size() == 101, "state replay did not reach n=100");
    require(wit.witness_membership_ok.size() == 101, "witness replay did not reach n=100");
}

void criterion_full_dd_chain() {
    const auto links = verify_chain_small(3);
    require(links.size() == 3, "expected three chain links");
    for (const auto& link : links) {
        const std::string at = " at n=" + std::to_string(link.n);
        require(link.grows, "sigma_{n-1} not contained in sigma_n" + at);
        require(link.strict, "chain link not strict" + at);
        require(link.rho_inside, "rho_n not inside sigma_n" + at);
        require(link.rho_outside_prev, "rho_n not outside sigma_{n-1}" + at);
    }
}

void criterion_distributivity_violation() {
    const BaseCones& base = BaseCones::standard();
    const Cone small = eval("A|(B&C)", base);
    const Cone big = eval("(A|B)&(A|C)", base);
    require(subset(small, big), "A|(B&C) not contained in (A|B)&(A|C)");
    require(!subset(big, small), "containment is not strict");

    const Vec8 separator = rho(2);
    const Certificate inside = member(separator, big);
    const Certificate outside = member(separator, small);
    require(is_inside(inside), "rho_2 not inside (A|B)&(A|C)");
    require(!is_inside(outside), "rho_2 not outside A|(B&C)");
    require(verify(separator, inside, big), "inside certificate failed re-verification");
    require(verify(separator, outside, small), "outside certificate failed re-verification");
}

void criterion_property_suites() {
    std::mt19937_64 gen(101);

    // closed double dual and dd round trip on 200 random cones
    for (int trial = 0; trial < 200; ++trial) {
        const Cone c = dd_convert(Cone::from_generators(random_ray_set(gen)));
        const Cone ddc = materialized_dual(materialized_dual(c));
        require(cone_equal(ddc, c), "double dual differs from the cone");
        const Cone back = dd_convert(Cone::from_inequalities(c.facets()));
        require(back.generators() == c.generators(), "dd round trip lost generators");
        require(back.facets() == c.facets(), "dd round trip lost facets");
    }

    // duality exchanges join and meet; lattice laws
    for (int trial = 0; trial < 25; ++trial) {
        const Cone c1 = dd_convert(Cone::from_generators(random_ray_set(gen, 8)));
        const Cone c2 = dd_convert(Cone::from_generators(random_ray_set(gen, 8)));
        require(cone_equal(materialized_dual(meet(c1, c2)),
                           join(materialized_dual(c1), materialized_dual(c2))),
                "dual of meet is not join of duals");
        require(cone_equal(materialized_dual(join(c1, c2)),
                           meet(materialized_dual(c1), materialized_dual(c2))),
                "dual of join is not meet of duals");
        require(cone_equal(join(c1, c1), c1), "join not idempotent");
        require(cone_equal(meet(c1, c1), c1), "meet not idempotent");
        require(cone_equal(meet(c1, join(c1, c2)), c1), "absorption (meet-join) failed");
        require(cone_equal(join(c1, meet(c1, c2)), c1), "absorption (join-meet) failed");
    }

    // membership agreement, inequality path vs feasibility path, and the
    // quadruple oracles, 1000 points per base cone
    const BaseCones& base = BaseCones::standard();
    const std::array<std::array<std::array<int, 4>, 2>, 3> quads = {{
        {{{1, 4, 5, 8}, {2, 3, 6, 7}}},
        {{{1, 3, 6, 8}, {2, 4, 5, 7}}},
        {{{1, 2, 7, 8}, {3, 4, 5, 6}}},
    }};
    const std::array<Atom, 3> atoms = {Atom::A, Atom::B, Atom::C};
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        const Cone& cone = base.of(atoms[k]);
        const Cone vonly = Cone::from_generators(cone.generators());
        const Cone honly = Cone::from_inequalities(cone.facets());
        for (int trial = 0; trial < 1000; ++trial) {
            const Vec8 p = random_nonneg_vec(gen, 7);
            const bool via_h = contains(honly, p);
            require(via_h == contains(vonly, p), "membership paths disagree");
            bool oracle = true;
            for (const auto& quad : quads[k]) {
                Rat total = 0;
                for (int i : quad) total += p[static_cast<std::size_t>(i) - 1];
                for (int i : quad) {
                    const Rat& pi = p[static_cast<std::size_t>(i) - 1];
                    if (pi > total - pi) oracle = false;
                }
            }
            require(via_h == oracle, "membership disagrees with the inequality oracle");
        }
    }
}

void criterion_profile_consistency() {
    std::mt19937_64 gen(103);
    const auto& pairs = profile_order_pairs();
    require(!pairs.empty(), "no order relations among the profiled cones");
    for (int trial = 0; trial < 1000; ++trial) {
        const PSProfile profile = ps_profile(random_nonneg_vec(gen, 6));
        for (const auto& [i, j] : pairs)
            require(!profile.entries[i].member || profile.entries[j].member,
                    "profile violates the lattice order");
    }
    for (const auto& d : delta_rays())
        require(ps_profile(to_vec8(d)).class_bits() == std::string(18, '1'),
                "diagonal ray profile not all true");
    const PSProfile pure = ps_profile(to_vec8(unit_ray(1)));
    require(!pure.entries[0].member && !pure.entries[1].member && !pure.entries[2].member,
            "pure GHZ direction should miss A, B and C");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"base-cone cross-check (12 rays / 16 facets, both directions)", 5.0,
         criterion_base_cross_check},
        {"pairing identity <W_n, rho_{n+1}> = -2 for n <= 100", 1.0, criterion_pairing_identity},
        {"induction replays certify 100 chain levels", 10.0, criterion_induction_replays},
        {"full double-description chain sigma_0 through sigma_3", 600.0, criterion_full_dd_chain},
        {"distributivity violation with certified separator", 600.0,
         criterion_distributivity_violation},
        {"property suites (duality, round trips, lattice laws, membership)", 120.0,
         criterion_property_suites},
        {"PS-profile consistency on 1000 random states", 600.0, criterion_profile_consistency},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.body();
        } catch (const ResourceExceededError& e) {
            verdict = "FAIL";
            detail = std::string(" — resource cap: ") + e.what();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = std::string(" — ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (verdict == "PASS" && seconds > c.budget_seconds) {
            verdict = "FAIL";
            detail = " — exceeded the " + std::to_string(c.budget_seconds) + "s budget";
        }
        if (verdict == "FAIL") ++failures;
        std::printf("[%s] criterion %zu: %s (%.2fs)%s\n", verdict.c_str(), i + 1, c.name.c_str(),
                    seconds, detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
