#include "pslat/classify.hpp"

#include <unordered_map>

#include <nlohmann/json.hpp>

#include "pslat/errors.hpp"
#include "pslat/lattice.hpp"

namespace pslat {

namespace {

nlohmann::json quad_to_json(const std::array<Rat, 4>& q) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : q) arr.push_back(to_string(x));
    return arr;
}

std::array<Rat, 4> quad_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("X-state components must be arrays of 4 entries");
    std::array<Rat, 4> q;
    for (std::size_t i = 0; i < 4; ++i)
        q[i] = j[i].is_string() ? parse_rational(j[i].get<std::string>())
                                : Rat(static_cast<long>(j[i].get<long long>()));
    return q;
}

}  // namespace

nlohmann::json XState::to_json() const {
    return {{"a", quad_to_json(a)},
            {"b", quad_to_json(b)},
            {"c", quad_to_json(c)},
            {"ghz_diagonal", is_ghz_diagonal(*this)},
            {"state", is_positive_state(*this)}};
}

XState XState::from_json(const nlohmann::json& j) {
    XState x;
    x.a = quad_from_json(j.at("a"));
    x.b = quad_from_json(j.at("b"));
    x.c = quad_from_json(j.at("c"));
    return x;
}

bool is_ghz_diagonal(const XState& x) { return x.a == x.b; }

bool is_positive_state(const XState& x) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (x.a[i] < 0 || x.b[i] < 0) return false;
        if (x.c[i] * x.c[i] > x.a[i] * x.b[i]) return false;
    }
    return true;
}

XState xstate_from_spectrum(const Vec8& p) {
    XState x;
    const Rat half(1, 2);
    for (std::size_t i = 0; i < 4; ++i) {
        // Pairs (p1,p8), (p2,p7), (p3,p6), (p4,p5).
        const Rat& hi = p[i];
        const Rat& lo = p[7 - i];
        x.a[i] = half * (hi + lo);
        x.b[i] = x.a[i];
        x.c[i] = half * (hi - lo);
    }
    return x;
}

Vec8 spectrum_from_xstate(const XState& x) {
    if (!is_ghz_diagonal(x)) throw NotGhzDiagonalError();
    Vec8 p;
    for (std::size_t i = 0; i < 4; ++i) {
        p[i] = x.a[i] + x.c[i];
        p[7 - i] = x.a[i] - x.c[i];
    }
    return p;
}

const std::vector<std::string>& profile_cone_names() {
    static const std::vector<std::string> names = {
        // the eight cones of the basic list
        "A", "B", "C", "A&B", "B&C", "C&A", "A|B|C", "A&B&C",
        // and the ten from the expanded list
        "A|B", "B|C", "C|A", "A&(B|C)", "B&(C|A)", "C&(A|B)", "(A|B)&(A|C)", "(B|A)&(B|C)",
        "(C|A)&(C|B)", "(A|B)&(B|C)&(C|A)"};
    return names;
}

const std::vector<Cone>& profile_cones() {
    static const std::vector<Cone> cones = [] {
        const BaseCones& base = BaseCones::standard();
        std::unordered_map<std::string, Cone> memo;
        std::vector<Cone> out;
        for (const auto& name : profile_cone_names()) out.push_back(eval(parse(name), base, memo));
        return out;
    }();
    return cones;
}

const std::vector<std::pair<std::size_t, std::size_t>>& profile_order_pairs() {
    static const std::vector<std::pair<std::size_t, std::size_t>> pairs = [] {
        const auto& cones = profile_cones();
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < cones.size(); ++i)
            for (std::size_t j = 0; j < cones.size(); ++j)
                if (i != j && subset(cones[i], cones[j])) out.emplace_back(i, j);
        return out;
    }();
    return pairs;
}

std::string PSProfile::class_bits() const {
    std::string bits;
    bits.reserve(entries.size());
    for (const auto& e : entries) bits.push_back(e.member ? '1' : '0');
    return bits;
}

nlohmann::json PSProfile::to_json() const {
    nlohmann::json profile = nlohmann::json::array();
    for (const auto& e : entries)
        profile.push_back({{"cone", e.cone},
                           {"member", e.member},
                           {"certificate", certificate_to_json(e.certificate)}});
    return {{"state", vec8_to_json(state)}, {"profile", profile}, {"class_bits", class_bits()}};
}

PSProfile ps_profile(const Vec8& p) {
    for (std::size_t i = 0; i < kDim; ++i)
        if (p[i] < 0) throw NegativeEntryError(i);
    PSProfile result;
    result.state = p;
    const auto& names = profile_cone_names();
    const auto& cones = profile_cones();
    for (std::size_t i = 0; i < names.size(); ++i) {
        Certificate cert = member(p, cones[i]);
        result.entries.push_back({names[i], is_inside(cert), std::move(cert)});
    }
    return result;
}

}  // namespace pslat
