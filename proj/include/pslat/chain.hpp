#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "pslat/cone.hpp"
#include "pslat/lattice.hpp"

namespace pslat {

// The strict chain sigma_0 = A, sigma_n = f(sigma_{n-1}) is witnessed by the
// states rho_n (inside sigma_n) and the dual vectors W_n (inside sigma_n*,
// pairing -2 with rho_{n+1}). Everything below is exact integer arithmetic in
// n with parity branches; the replays certify membership at arbitrary n
// without computing the cones.

Rat chain_constant(long n);  // a_n in the closed form of rho_n

// rho_n via the closed form, cross-checked against the recursion
// rho_{n+1} = rho_n + beta + gamma + alpha increments; a mismatch throws.
Vec8 rho(long n);  // throws NegativeIndexError

struct Increments {
    Vec8 beta, gamma, alpha;
    Vec8 total() const;
};
Increments rho_increments(long n);  // throws NegativeIndexError

Vec8 witness(long n);  // throws NegativeIndexError

struct ChainStep {
    long n;
    Vec8 rho_n;
    Increments increments;
    Vec8 witness_n;
    Rat a_n;
};
ChainStep chain_step(long n);

struct InductionReport {
    long max_n = 0;
    std::vector<bool> state_membership_ok;    // rho_n in sigma_n, n = 0..max_n
    std::vector<bool> witness_membership_ok;  // W_n in sigma_n*, n = 0..max_n
    std::vector<Rat> pairing_values;          // <W_n, rho_{n+1}>, n = 0..max_n-1
    nlohmann::json certificates() const;      // replayable proof objects per n
    bool all_ok() const;
    nlohmann::json to_json() const;

    // populated by the replays; kept as raw JSON fragments
    std::vector<nlohmann::json> state_certs, witness_certs;
};

// Replays the five-step primal induction: rho_n passes the gamma gate, each
// increment decomposes over its base cone's extreme rays, and the running
// sums pass the alpha and beta gates. Certifies rho_n in sigma_n for all
// n <= n_max. Throws ReplayError on any failed arithmetic check.
InductionReport replay_state_induction(long n_max);

// Replays the dual induction: starting from W_0 (an extreme ray of alpha*),
// each step adds a named dual generator or splits off one plus nonnegative
// multiples of the e_i. Certifies W_n in sigma_n* for all n <= n_max.
InductionReport replay_witness_induction(long n_max);

InductionReport merge_reports(const InductionReport& state, const InductionReport& witness);

struct ChainLink {
    long n;
    bool grows;          // sigma_{n-1} subset of sigma_n
    bool strict;         // and not conversely
    bool rho_inside;     // rho_n in sigma_n
    bool rho_outside_prev;
    Certificate inside_cert;
    Certificate outside_cert;
};

// Full double-description verification of the chain up to n_max (small n
// only; cost grows with the cone sizes). Throws ResourceExceededError when
// the DD cap is hit.
std::vector<ChainLink> verify_chain_small(long n_max);

}  // namespace pslat
