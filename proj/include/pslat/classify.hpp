#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pslat/cone.hpp"

namespace pslat {

// X-shaped self-adjoint matrix data: diagonal halves a, b and the (real)
// anti-diagonal c. GHZ-diagonal means a = b.
struct XState {
    std::array<Rat, 4> a{}, b{}, c{};
    nlohmann::json to_json() const;
    static XState from_json(const nlohmann::json& j);
};

bool is_ghz_diagonal(const XState& x);
bool is_positive_state(const XState& x);  // a,b >= 0 and c_i^2 <= a_i b_i

// a = b = (p1+p8, p2+p7, p3+p6, p4+p5)/2, c = (p1-p8, p2-p7, p3-p6, p4-p5)/2.
XState xstate_from_spectrum(const Vec8& p);

// Inverse identification; requires a = b. p1 = a1+c1, p8 = a1-c1, ...
Vec8 spectrum_from_xstate(const XState& x);  // throws NotGhzDiagonalError

// The 18 named cones profiled for PS classification, in fixed order.
const std::vector<std::string>& profile_cone_names();
const std::vector<Cone>& profile_cones();  // evaluated once, both representations

// Pairs (i, j) with profile cone i contained in profile cone j; membership in
// i must then imply membership in j.
const std::vector<std::pair<std::size_t, std::size_t>>& profile_order_pairs();

struct ProfileEntry {
    std::string cone;
    bool member;
    Certificate certificate;
};

struct PSProfile {
    Vec8 state;
    std::vector<ProfileEntry> entries;
    std::string class_bits() const;  // 18-character '0'/'1' pattern
    nlohmann::json to_json() const;
};

// Membership of an unnormalized GHZ-diagonal state in all 18 cones.
PSProfile ps_profile(const Vec8& p);  // throws NegativeEntryError

}  // namespace pslat
