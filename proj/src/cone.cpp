#include "pslat/cone.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pslat/dd.hpp"
#include "pslat/errors.hpp"
#include "pslat/simplex.hpp"

namespace pslat {

struct Cone::Rep {
    std::optional<std::vector<Ray>> vrep;
    std::optional<std::vector<Ray>> hrep;
    mutable std::atomic<int> dim_hint{-1};
};

namespace {

std::vector<Ray> rays_from_vecs(const std::vector<Vec8>& vecs) {
    std::vector<Ray> rays;
    rays.reserve(vecs.size());
    for (const auto& v : vecs) rays.push_back(normalize_ray(v));
    return rays;
}

// Generators of the dual side: for a vrep this yields the facet normals, for
// an hrep the extreme rays. Same routine both directions.
std::vector<Ray> convert_rep(const std::vector<Ray>& rep) {
    if (rep.empty()) {
        // cone({}) = {0}; its dual is all of R^8, generated by +-e_i.
        std::vector<Ray> full;
        for (int i = 1; i <= static_cast<int>(kDim); ++i) {
            full.push_back(unit_ray(i));
            full.push_back(Int(-1) * unit_ray(i));
        }
        std::sort(full.begin(), full.end());
        return full;
    }
    return dd::flatten(dd::enumerate_generators(rep));
}

}  // namespace

Cone Cone::make(std::optional<std::vector<Ray>> v, std::optional<std::vector<Ray>> h) {
    auto rep = std::make_shared<Rep>();
    rep->vrep = std::move(v);
    rep->hrep = std::move(h);
    return Cone(std::move(rep));
}

Cone Cone::from_generators(const std::vector<Vec8>& rays) {
    return from_generators(rays_from_vecs(rays));
}

Cone Cone::from_generators(std::vector<Ray> rays) {
    if (rays.empty()) throw std::invalid_argument("from_generators: need at least one ray");
    return make(dd::canonicalize_generators(std::move(rays)), std::nullopt);
}

Cone Cone::from_inequalities(const std::vector<Vec8>& normals) {
    return from_inequalities(rays_from_vecs(normals));
}

Cone Cone::from_inequalities(std::vector<Ray> normals) {
    // Redundant inequalities are exactly the conically redundant members of
    // the dual generating set.
    return make(std::nullopt, dd::canonicalize_generators(std::move(normals)));
}

Cone Cone::zero_cone() { return make(std::vector<Ray>{}, std::nullopt); }

Cone Cone::full_space() { return make(std::nullopt, std::vector<Ray>{}); }

bool Cone::has_vrep() const { return rep_->vrep.has_value(); }
bool Cone::has_hrep() const { return rep_->hrep.has_value(); }

const std::vector<Ray>& Cone::generators() const {
    if (!rep_->vrep) throw std::logic_error("cone has no generator representation; dd_convert first");
    return *rep_->vrep;
}

const std::vector<Ray>& Cone::facets() const {
    if (!rep_->hrep) throw std::logic_error("cone has no inequality representation; dd_convert first");
    return *rep_->hrep;
}

std::size_t Cone::dim() const {
    int cached = rep_->dim_hint.load();
    if (cached >= 0) return static_cast<std::size_t>(cached);
    const std::size_t d =
        rep_->vrep ? dd::rank(*rep_->vrep) : dd::rank(convert_rep(*rep_->hrep));
    rep_->dim_hint.store(static_cast<int>(d));
    return d;
}

Cone dd_convert(const Cone& c) {
    const auto& rep = *c.rep_;
    std::vector<Ray> v = rep.vrep ? *rep.vrep : convert_rep(*rep.hrep);
    std::vector<Ray> h = rep.hrep ? *rep.hrep : convert_rep(v);
    for (const auto& g : v)
        for (const auto& n : h)
            if (pairing(g, n) < 0)
                throw std::logic_error("dd_convert: representations disagree");
    return Cone::make(std::move(v), std::move(h));
}

Cone join(const Cone& c1, const Cone& c2) {
    std::vector<Ray> gens = c1.rep_->vrep ? *c1.rep_->vrep : convert_rep(*c1.rep_->hrep);
    const std::vector<Ray> more = c2.rep_->vrep ? *c2.rep_->vrep : convert_rep(*c2.rep_->hrep);
    gens.insert(gens.end(), more.begin(), more.end());
    return Cone::make(dd::canonicalize_generators(std::move(gens)), std::nullopt);
}

Cone meet(const Cone& c1, const Cone& c2) {
    std::vector<Ray> normals = c1.rep_->hrep ? *c1.rep_->hrep : convert_rep(*c1.rep_->vrep);
    const std::vector<Ray> more = c2.rep_->hrep ? *c2.rep_->hrep : convert_rep(*c2.rep_->vrep);
    normals.insert(normals.end(), more.begin(), more.end());
    return Cone::make(std::nullopt, dd::canonicalize_generators(std::move(normals)));
}

Cone dual(const Cone& c) {
    // The canonical generators of C are the canonical facets of C* and vice
    // versa, so duality is exactly a swap of roles.
    return Cone::make(c.rep_->hrep, c.rep_->vrep);
}

bool subset(const Cone& c1, const Cone& c2) {
    const Cone a = c1.has_vrep() ? c1 : dd_convert(c1);
    const Cone b = c2.has_hrep() ? c2 : dd_convert(c2);
    for (const auto& g : a.generators())
        for (const auto& n : b.facets())
            if (pairing(g, n) < 0) return false;
    return true;
}

bool cone_equal(const Cone& c1, const Cone& c2) {
    const Cone a = c1.has_vrep() ? c1 : dd_convert(c1);
    const Cone b = c2.has_vrep() ? c2 : dd_convert(c2);
    return a.generators() == b.generators();
}

bool contains(const Cone& c, const Vec8& p) {
    if (c.has_hrep()) {
        for (const auto& n : c.facets())
            if (pairing(p, n) < 0) return false;
        return true;
    }
    return in_conic_hull(c.generators(), p);
}

Certificate member(const Vec8& p, const Cone& c) {
    const Cone full = (c.has_hrep() && c.has_vrep()) ? c : dd_convert(c);
    for (const auto& n : full.facets())
        if (pairing(p, n) < 0) return OutsideCertificate{n};
    auto lambda = conic_combination(full.generators(), p);
    if (!lambda) throw std::logic_error("member: inequality and feasibility paths disagree");
    InsideCertificate inside;
    for (std::size_t i = 0; i < lambda->size(); ++i)
        if ((*lambda)[i] != 0) inside.combination.emplace_back(full.generators()[i], (*lambda)[i]);
    return inside;
}

bool verify(const Vec8& p, const Certificate& cert, const Cone& c) {
    const Cone full = c.has_vrep() ? c : dd_convert(c);
    const auto& gens = full.generators();
    if (const auto* in = std::get_if<InsideCertificate>(&cert)) {
        Vec8 sum{};
        for (const auto& [ray, coeff] : in->combination) {
            if (coeff < 0) return false;
            if (std::find(gens.begin(), gens.end(), ray) == gens.end()) return false;
            sum = sum + coeff * to_vec8(ray);
        }
        return sum == p;
    }
    const auto& out = std::get<OutsideCertificate>(cert);
    if (pairing(p, out.witness) >= 0) return false;
    for (const auto& g : gens)
        if (pairing(to_vec8(g), out.witness) < 0) return false;
    return true;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    if (const auto* in = std::get_if<InsideCertificate>(&cert)) {
        j["kind"] = "inside";
        auto& comb = j["combination"] = nlohmann::json::array();
        for (const auto& [ray, coeff] : in->combination)
            comb.push_back({{"generator", ray_to_json(ray)}, {"coefficient", to_string(coeff)}});
    } else {
        j["kind"] = "outside";
        j["witness"] = ray_to_json(std::get<OutsideCertificate>(cert).witness);
    }
    return j;
}

nlohmann::json Cone::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    if (rep_->vrep) {
        auto& rays = j["rays"] = nlohmann::json::array();
        for (const auto& r : *rep_->vrep) rays.push_back(ray_to_json(r));
    }
    if (rep_->hrep) {
        auto& facets = j["facets"] = nlohmann::json::array();
        for (const auto& n : *rep_->hrep) facets.push_back(ray_to_json(n));
    }
    return j;
}

Cone Cone::from_json(const nlohmann::json& j) {
    std::optional<std::vector<Ray>> v, h;
    if (j.contains("rays")) {
        std::vector<Ray> rays;
        for (const auto& e : j.at("rays")) rays.push_back(ray_from_json(e));
        v = dd::canonicalize_generators(std::move(rays));
    }
    if (j.contains("facets")) {
        std::vector<Ray> normals;
        for (const auto& e : j.at("facets")) normals.push_back(ray_from_json(e));
        h = dd::canonicalize_generators(std::move(normals));
    }
    if (!v && !h) throw std::invalid_argument("cone JSON needs \"rays\" or \"facets\"");
    if (v && h) {
        for (const auto& g : *v)
            for (const auto& n : *h)
                if (pairing(g, n) < 0)
                    throw std::invalid_argument("cone JSON: rays and facets disagree");
    }
    return make(std::move(v), std::move(h));
}

}  // namespace pslat
