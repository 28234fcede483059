#include "pslat/chain.hpp"

#include <algorithm>
#include <mutex>

#include <nlohmann/json.hpp>

#include "pslat/errors.hpp"

namespace pslat {

namespace {

Vec8 scaled_pair(long coeff, int i, int j) {
    return Rat(coeff) * (unit_vec(i) + unit_vec(j));
}

bool even(long n) { return n % 2 == 0; }

}  // namespace

Rat chain_constant(long n) {
    if (n < 0) throw NegativeIndexError(n);
    const Rat nn(n);
    if (even(n)) return Rat(Rat(3, 2) * nn * nn + 3 * nn + 1);
    return Rat(Rat(3, 2) * nn * nn + 2 * nn + Rat(3, 2));
}

Increments rho_increments(long n) {
    if (n < 0) throw NegativeIndexError(n);
    Increments inc;
    if (even(n)) {
        inc.beta = scaled_pair(2 * n + 2, 1, 3) + scaled_pair(1, 4, 5);
        inc.gamma = scaled_pair(2 * n + 2, 3, 5);
        inc.alpha = scaled_pair(2 * n + 4, 2, 3) + scaled_pair(1, 4, 5);
    } else {
        inc.beta = scaled_pair(2 * n + 1, 2, 5) + scaled_pair(1, 2, 4);
        inc.gamma = scaled_pair(2 * n + 2, 1, 2);
        inc.alpha = scaled_pair(2 * n + 3, 1, 5) + scaled_pair(1, 1, 4);
    }
    return inc;
}

Vec8 Increments::total() const { return beta + gamma + alpha; }

namespace {

Vec8 rho_closed_form(long n) {
    const Rat a = chain_constant(n);
    const Rat odd_sign = even(n) ? Rat(1) : Rat(-1);
    Vec8 v{};
    v[0] = a + odd_sign;
    v[1] = a;
    v[2] = even(n) ? Rat(a - (2 * n + 1)) : Rat(a + (2 * n + 1));
    v[3] = 2 * n + 1;
    v[4] = a;
    v[5] = 0;
    v[6] = 1;
    v[7] = 0;
    return v;
}

}  // namespace

Vec8 rho(long n) {
    if (n < 0) throw NegativeIndexError(n);
    // Recursion-built prefix, each entry checked against the closed form once.
    static std::mutex mutex;
    static std::vector<Vec8> cache;
    std::scoped_lock lock(mutex);
    if (cache.empty()) {
        const Vec8 rho0 = vec8_from_strings({"2", "1", "0", "1", "1", "0", "1", "0"});
        if (rho0 != rho_closed_form(0)) throw std::logic_error("rho: closed form broken at n=0");
        cache.push_back(rho0);
    }
    while (static_cast<long>(cache.size()) <= n) {
        const long k = static_cast<long>(cache.size()) - 1;
        const Vec8 next = cache.back() + rho_increments(k).total();
        if (next != rho_closed_form(k + 1))
            throw std::logic_error("rho: recursion and closed form disagree at n=" +
                                   std::to_string(k + 1));
        cache.push_back(next);
    }
    return cache[static_cast<std::size_t>(n)];
}

Vec8 witness(long n) {
    if (n < 0) throw NegativeIndexError(n);
    Vec8 w{};
    w[1] = even(n) ? 1 : -1;
    w[2] = even(n) ? -1 : 1;
    w[5] = 2 * n + 1;
    w[6] = 2 * n + 1;
    w[7] = 2 * n;
    return w;
}

ChainStep chain_step(long n) {
    return ChainStep{n, rho(n), rho_increments(n), witness(n), chain_constant(n)};
}

namespace {

bool in_table(const std::vector<Ray>& table, const Ray& r) {
    return std::find(table.begin(), table.end(), r) != table.end();
}

// <p, q> >= 0 for every q in E(base*): the exact membership gate for the base
// cones, equivalent to the quadruple inequalities plus nonnegativity.
void check_base_gate(const Vec8& p, Atom base, long n, const char* step) {
    for (const auto& q : base_dual_generators(base))
        if (pairing(p, q) < 0) throw ReplayError(n, step);
}

// Verify an explicit combination of table generators and record it.
nlohmann::json check_decomposition(const Vec8& target, Atom base,
                                   const std::vector<std::pair<Ray, Rat>>& combo, long n,
                                   const char* step) {
    Vec8 sum{};
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& [ray, coeff] : combo) {
        if (coeff < 0 || !in_table(base_generators(base), ray)) throw ReplayError(n, step);
        sum = sum + coeff * to_vec8(ray);
        parts.push_back({{"generator", ray_to_json(ray)}, {"coefficient", to_string(coeff)}});
    }
    if (sum != target) throw ReplayError(n, step);
    return {{"base", std::string(1, atom_name(base))},
            {"vector", vec8_to_json(target)},
            {"combination", parts}};
}

// The named combinations behind each increment; these mirror the defining
// formulas generator by generator.
std::vector<std::pair<Ray, Rat>> increment_combo(long n, Atom base) {
    if (even(n)) {
        switch (base) {
            case Atom::B: return {{ray_of({1, 3}), Rat(2 * n + 2)}, {ray_of({4, 5}), Rat(1)}};
            case Atom::C: return {{ray_of({3, 5}), Rat(2 * n + 2)}};
            case Atom::A: return {{ray_of({2, 3}), Rat(2 * n + 4)}, {ray_of({4, 5}), Rat(1)}};
        }
    } else {
        switch (base) {
            case Atom::B: return {{ray_of({2, 5}), Rat(2 * n + 1)}, {ray_of({2, 4}), Rat(1)}};
            case Atom::C: return {{ray_of({1, 2}), Rat(2 * n + 2)}};
            case Atom::A: return {{ray_of({1, 5}), Rat(2 * n + 3)}, {ray_of({1, 4}), Rat(1)}};
        }
    }
    throw std::logic_error("bad atom");
}

}  // namespace

bool InductionReport::all_ok() const {
    auto all = [](const std::vector<bool>& v) {
        return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
    };
    if (!all(state_membership_ok) || !all(witness_membership_ok)) return false;
    for (const auto& p : pairing_values)
        if (p != -2) return false;
    return true;
}

nlohmann::json InductionReport::certificates() const {
    nlohmann::json j = nlohmann::json::object();
    if (!state_certs.empty()) j["state"] = state_certs;
    if (!witness_certs.empty()) j["witness"] = witness_certs;
    return j;
}

nlohmann::json InductionReport::to_json() const {
    nlohmann::json j;
    j["max_n"] = max_n;
    j["state_membership_ok"] = state_membership_ok;
    j["witness_membership_ok"] = witness_membership_ok;
    nlohmann::json pairings = nlohmann::json::array();
    for (const auto& p : pairing_values) pairings.push_back(to_string(p));
    j["pairing_values"] = pairings;
    j["all_ok"] = all_ok();
    j["certificates"] = certificates();
    return j;
}

InductionReport replay_state_induction(long n_max) {
    if (n_max < 0) throw NegativeIndexError(n_max);
    InductionReport report;
    report.max_n = n_max;

    // Base case: rho_0 decomposes over E(alpha) term by term.
    {
        const Vec8 rho0 = rho(0);
        check_base_gate(rho0, Atom::A, 0, "base: rho_0 alpha gate");
        auto cert = check_decomposition(
            rho0, Atom::A,
            {{ray_of({1, 4}), Rat(1)}, {ray_of({1, 5}), Rat(1)}, {ray_of({2, 7}), Rat(1)}}, 0,
            "base: rho_0 decomposition");
        report.state_certs.push_back({{"n", 0}, {"steps", nlohmann::json::array({cert})}});
        report.state_membership_ok.push_back(true);
    }

    Vec8 current = rho(0);
    for (long n = 0; n < n_max; ++n) {
        nlohmann::json steps = nlohmann::json::array();
        const Increments inc = rho_increments(n);

        // rho_n in gamma lifts it into sigma_n^1 = gamma meet sigma_n.
        check_base_gate(current, Atom::C, n, "gamma gate on rho_n");
        steps.push_back({{"gate", "C"}, {"vector", vec8_to_json(current)}});

        steps.push_back(
            check_decomposition(inc.beta, Atom::B, increment_combo(n, Atom::B), n, "beta increment"));
        const Vec8 after_beta = current + inc.beta;
        check_base_gate(after_beta, Atom::A, n, "alpha gate on rho_n + beta increment");
        steps.push_back({{"gate", "A"}, {"vector", vec8_to_json(after_beta)}});

        steps.push_back(check_decomposition(inc.gamma, Atom::C, increment_combo(n, Atom::C), n,
                                            "gamma increment"));
        const Vec8 after_gamma = after_beta + inc.gamma;
        check_base_gate(after_gamma, Atom::B, n, "beta gate on rho_n + beta + gamma increments");
        steps.push_back({{"gate", "B"}, {"vector", vec8_to_json(after_gamma)}});

        steps.push_back(
            check_decomposition(inc.alpha, Atom::A, increment_combo(n, Atom::A), n, "alpha increment"));

        current = after_gamma + inc.alpha;
        if (current != rho(n + 1)) throw ReplayError(n, "recursion step");

        report.pairing_values.push_back(pairing(witness(n), current));
        report.state_certs.push_back({{"n", n + 1}, {"steps", steps}});
        report.state_membership_ok.push_back(true);
    }
    return report;
}

namespace {

struct DualMove {
    Ray add;     // named generator joined in
    Atom add_of;  // ... a member of E(add_of*)
    Ray split;   // named generator split off in the following decomposition
    Atom split_of;
};

// The three (add, decompose) pairs of one dual induction step.
std::array<DualMove, 3> dual_moves(long n) {
    if (even(n)) {
        return {DualMove{ray_of({1, 7, 8}, {2}), Atom::C, ray_of({1, 6, 8}, {3}), Atom::B},
                DualMove{ray_of({3, 6, 7}, {2}), Atom::A, ray_of({1, 7, 8}, {2}), Atom::C},
                DualMove{ray_of({3, 6, 8}, {1}), Atom::B, ray_of({3, 6, 7}, {2}), Atom::A}};
    }
    return {DualMove{ray_of({2, 7, 8}, {1}), Atom::C, ray_of({3, 6, 8}, {1}), Atom::B},
            DualMove{ray_of({2, 6, 7}, {3}), Atom::A, ray_of({2, 7, 8}, {1}), Atom::C},
            DualMove{ray_of({1, 6, 8}, {3}), Atom::B, ray_of({2, 6, 7}, {3}), Atom::A}};
}

}  // namespace

InductionReport replay_witness_induction(long n_max) {
    if (n_max < 0) throw NegativeIndexError(n_max);
    InductionReport report;
    report.max_n = n_max;

    // Base case: W_0 is itself an extreme ray of alpha*.
    {
        const Vec8 w0 = witness(0);
        if (!in_table(base_dual_generators(Atom::A), normalize_ray(w0)))
            throw ReplayError(0, "base: W_0 in E(alpha*)");
        report.witness_certs.push_back(
            {{"n", 0}, {"extreme_ray_of", "A*"}, {"vector", vec8_to_json(w0)}});
        report.witness_membership_ok.push_back(true);
    }

    Vec8 current = witness(0);
    for (long n = 0; n < n_max; ++n) {
        nlohmann::json steps = nlohmann::json::array();
        for (const DualMove& move : dual_moves(n)) {
            if (!in_table(base_dual_generators(move.add_of), move.add))
                throw ReplayError(n, "added vector not a tabled dual generator");
            current = current + to_vec8(move.add);
            steps.push_back({{"add", ray_to_json(move.add)},
                             {"dual_of", std::string(1, atom_name(move.add_of))},
                             {"result", vec8_to_json(current)}});

            if (!in_table(base_dual_generators(move.split_of), move.split))
                throw ReplayError(n, "split vector not a tabled dual generator");
            const Vec8 residual = current - to_vec8(move.split);
            for (std::size_t i = 0; i < kDim; ++i)
                if (residual[i] < 0) throw ReplayError(n, "negative residual in dual decomposition");
            steps.push_back({{"split", ray_to_json(move.split)},
                             {"dual_of", std::string(1, atom_name(move.split_of))},
                             {"residual", vec8_to_json(residual)}});
        }
        if (current != witness(n + 1)) throw ReplayError(n, "dual recursion step");

        report.pairing_values.push_back(pairing(witness(n), rho(n + 1)));
        report.witness_certs.push_back({{"n", n + 1}, {"steps", steps}});
        report.witness_membership_ok.push_back(true);
    }
    return report;
}

InductionReport merge_reports(const InductionReport& state, const InductionReport& witness) {
    InductionReport merged;
    merged.max_n = std::min(state.max_n, witness.max_n);
    merged.state_membership_ok = state.state_membership_ok;
    merged.witness_membership_ok = witness.witness_membership_ok;
    merged.pairing_values = state.pairing_values;
    merged.state_certs = state.state_certs;
    merged.witness_certs = witness.witness_certs;
    return merged;
}

std::vector<ChainLink> verify_chain_small(long n_max) {
    if (n_max < 0) throw NegativeIndexError(n_max);
    const BaseCones& base = BaseCones::standard();
    std::vector<ChainLink> links;
    Cone prev = base.alpha;
    for (long n = 1; n <= n_max; ++n) {
        const Cone cur = f_cone(prev, base);
        const Vec8 state = rho(n);
        ChainLink link{n,
                       subset(prev, cur),
                       !subset(cur, prev),
                       false,
                       false,
                       member(state, cur),
                       member(state, prev)};
        link.rho_inside = is_inside(link.inside_cert);
        link.rho_outside_prev = !is_inside(link.outside_cert);
        if (!verify(state, link.inside_cert, cur) || !verify(state, link.outside_cert, prev))
            throw std::logic_error("chain certificate failed re-verification at n=" +
                                   std::to_string(n));
        links.push_back(std::move(link));
        prev = cur;
    }
    return links;
}

}  // namespace pslat
