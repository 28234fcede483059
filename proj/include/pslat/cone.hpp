#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pslat/rational.hpp"

namespace pslat {

// Proof objects for membership queries. Inside carries exact nonnegative
// coefficients over the cone's canonical generators reconstructing the query
// point; Outside carries a facet normal pairing strictly negatively with the
// point and nonnegatively with every generator. Both re-verify by arithmetic
// alone (see verify()).
struct InsideCertificate {
    std::vector<std::pair<Ray, Rat>> combination;  // nonzero coefficients only
};
struct OutsideCertificate {
    Ray witness;
};
using Certificate = std::variant<InsideCertificate, OutsideCertificate>;

inline bool is_inside(const Certificate& c) {
    return std::holds_alternative<InsideCertificate>(c);
}

// Polyhedral cone in R^8, an immutable value. Carries one or both of
//  - vrep: canonical irredundant generator list (extreme rays; lineality, if
//    any, appears as opposed pairs),
//  - hrep: canonical irredundant inward facet normals (x belongs iff
//    <x,n> >= 0 for every normal; implicit equalities appear as opposed
//    pairs).
// Both lists are sorted lexicographically, so list equality is set equality
// and equal cones have identical representations.
class Cone {
public:
    static Cone from_generators(const std::vector<Vec8>& rays);
    static Cone from_generators(std::vector<Ray> rays);  // throws ZeroVectorError
    static Cone from_inequalities(const std::vector<Vec8>& normals);
    static Cone from_inequalities(std::vector<Ray> normals);  // empty = full space
    static Cone zero_cone();
    static Cone full_space();

    bool has_vrep() const;
    bool has_hrep() const;
    const std::vector<Ray>& generators() const;  // requires has_vrep()
    const std::vector<Ray>& facets() const;      // requires has_hrep()

    std::size_t dim() const;  // linear span dimension, 0..8

    // { "rays": [[string x8], ...], "facets": [...] }; present lists only.
    nlohmann::json to_json() const;
    static Cone from_json(const nlohmann::json& j);

private:
    struct Rep;
    explicit Cone(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    static Cone make(std::optional<std::vector<Ray>> v, std::optional<std::vector<Ray>> h);
    std::shared_ptr<const Rep> rep_;

    friend Cone dd_convert(const Cone& c);
    friend Cone join(const Cone& c1, const Cone& c2);
    friend Cone meet(const Cone& c1, const Cone& c2);
    friend Cone dual(const Cone& c);
};

// Populate both representations via double description; cross-verifies that
// every generator satisfies every inequality. Returns a new value.
Cone dd_convert(const Cone& c);

Cone join(const Cone& c1, const Cone& c2);  // convex hull of the union
Cone meet(const Cone& c1, const Cone& c2);  // intersection
Cone dual(const Cone& c);                   // {q : <p,q> >= 0 for all p in c}

bool subset(const Cone& c1, const Cone& c2);
bool cone_equal(const Cone& c1, const Cone& c2);

// Uncertified membership: inequality scan when an hrep is available,
// otherwise exact conic feasibility over the generators.
bool contains(const Cone& c, const Vec8& p);

// Certified membership. The Outside witness is the first violated facet in
// canonical order, so results are deterministic.
Certificate member(const Vec8& p, const Cone& c);

// Re-check a certificate by direct arithmetic against the cone.
bool verify(const Vec8& p, const Certificate& cert, const Cone& c);

nlohmann::json certificate_to_json(const Certificate& cert);

}  // namespace pslat
