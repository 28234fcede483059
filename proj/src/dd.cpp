#include "pslat/dd.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>

#include "pslat/errors.hpp"
#include "pslat/simplex.hpp"

namespace pslat::dd {

namespace {

std::size_t initial_cap() {
    if (const char* env = std::getenv("PSLAT_DD_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1'000'000;
}

std::atomic<std::size_t>& cap_storage() {
    static std::atomic<std::size_t> cap{initial_cap()};
    return cap;
}

using Bits = std::vector<std::uint64_t>;

bool bits_subset(const Bits& a, const Bits& b) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

Bits bits_and(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
    return out;
}

// Reduced row echelon basis of the span of `rows`: primitive integer rows,
// positive pivot entries, ordered by pivot column. Returns basis and pivots.
struct Echelon {
    std::vector<Ray> basis;
    std::vector<std::size_t> pivots;
};

Echelon rref(const std::vector<Ray>& rows) {
    std::vector<Vec8> work;
    work.reserve(rows.size());
    for (const auto& r : rows) work.push_back(to_vec8(r));

    Echelon result;
    std::size_t row = 0;
    for (std::size_t col = 0; col < kDim && row < work.size(); ++col) {
        std::size_t sel = work.size();
        for (std::size_t i = row; i < work.size(); ++i)
            if (work[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel == work.size()) continue;
        std::swap(work[row], work[sel]);
        const Rat inv = 1 / work[row][col];
        work[row] = inv * work[row];
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == row || work[i][col] == 0) continue;
            work[i] = work[i] - work[i][col] * work[row];
        }
        result.pivots.push_back(col);
        ++row;
    }
    for (std::size_t i = 0; i < result.pivots.size(); ++i)
        result.basis.push_back(normalize_ray(work[i]));  // pivot entry is +1 before scaling
    return result;
}

// Canonical coset representative: zero out the pivot coordinates of v.
// Returns nullopt when v lies in the span of the basis.
std::optional<Ray> reduce_mod(const Ray& v, const Echelon& ech) {
    Vec8 x = to_vec8(v);
    for (std::size_t i = 0; i < ech.basis.size(); ++i) {
        const std::size_t p = ech.pivots[i];
        if (x[p] == 0) continue;
        const Rat factor = x[p] / Rat(ech.basis[i][p]);
        x = x - factor * to_vec8(ech.basis[i]);
    }
    if (is_zero(x)) return std::nullopt;
    return normalize_ray(x);
}

struct DDRay {
    Ray v;
    Bits zero;  // processed constraints this ray is tight on
};

Bits zero_set(const Ray& v, const std::vector<Ray>& processed, std::size_t words) {
    Bits bits(words, 0);
    for (std::size_t k = 0; k < processed.size(); ++k)
        if (pairing(v, processed[k]) == 0) bits[k / 64] |= std::uint64_t{1} << (k % 64);
    return bits;
}

}  // namespace

std::size_t ray_cap() { return cap_storage().load(); }
void set_ray_cap(std::size_t cap) { cap_storage().store(cap); }

std::size_t rank(const std::vector<Ray>& vectors) { return rref(vectors).basis.size(); }

GeneratorForm enumerate_generators(std::vector<Ray> normals) {
    for (auto& n : normals) n = normalize_ray(n);
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());

    const std::size_t cap = ray_cap();
    const std::size_t words = normals.size() / 64 + 1;

    std::vector<Ray> lineality;
    for (int i = 1; i <= static_cast<int>(kDim); ++i) lineality.push_back(unit_ray(i));
    std::vector<DDRay> rays;
    std::vector<Ray> processed;

    for (const Ray& a : normals) {
        const std::size_t bit = processed.size();

        std::size_t pivot = lineality.size();
        for (std::size_t i = 0; i < lineality.size(); ++i)
            if (pairing(lineality[i], a) != 0) {
                pivot = i;
                break;
            }

        if (pivot != lineality.size()) {
            // The constraint cuts the lineality space: one basis vector turns
            // into a ray on the positive side, the rest get projected onto
            // the hyperplane, as do all existing rays.
            Ray z = lineality[pivot];
            if (pairing(z, a) < 0) z = Int(-1) * z;
            const Int t = pairing(z, a);  // > 0

            std::vector<Ray> next_lineality;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (i == pivot) continue;
                const Int s = pairing(lineality[i], a);
                Ray l = s == 0 ? lineality[i] : t * lineality[i] - s * z;
                next_lineality.push_back(normalize_ray(l));
            }
            lineality = std::move(next_lineality);

            for (auto& r : rays) {
                const Int s = pairing(r.v, a);
                if (s != 0) r.v = normalize_ray(t * r.v - s * z);
                r.zero[bit / 64] |= std::uint64_t{1} << (bit % 64);
            }
            DDRay nz{z, zero_set(z, processed, words)};
            rays.push_back(std::move(nz));  // <z,a> > 0: bit for a stays unset
            processed.push_back(a);
            continue;
        }

        std::vector<Int> s(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            s[i] = pairing(rays[i].v, a);
            if (s[i] > 0)
                pos.push_back(i);
            else if (s[i] < 0)
                neg.push_back(i);
        }

        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (s[i] == 0) rays[i].zero[bit / 64] |= std::uint64_t{1} << (bit % 64);
            processed.push_back(a);
            continue;
        }

        std::vector<DDRay> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (s[i] < 0) continue;
            DDRay keep = rays[i];
            if (s[i] == 0) keep.zero[bit / 64] |= std::uint64_t{1} << (bit % 64);
            next.push_back(std::move(keep));
        }

        for (std::size_t ip : pos) {
            for (std::size_t im : neg) {
                const Bits common = bits_and(rays[ip].zero, rays[im].zero);
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == ip || k == im) continue;
                    if (bits_subset(common, rays[k].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray w = normalize_ray(s[ip] * rays[im].v - s[im] * rays[ip].v);
                DDRay combo{std::move(w), {}};
                combo.zero = zero_set(combo.v, processed, words);
                combo.zero[bit / 64] |= std::uint64_t{1} << (bit % 64);
                next.push_back(std::move(combo));
                if (next.size() > cap) throw ResourceExceededError(cap, next.size());
            }
        }

        rays = std::move(next);
        processed.push_back(a);
    }

    GeneratorForm form;
    const Echelon ech = rref(lineality);
    form.lineality = ech.basis;
    for (const auto& r : rays) {
        auto reduced = reduce_mod(r.v, ech);
        if (!reduced) throw std::logic_error("dd: pointed-part ray inside lineality span");
        form.rays.push_back(*reduced);
    }
    std::sort(form.rays.begin(), form.rays.end());
    return form;
}

std::vector<Ray> flatten(const GeneratorForm& form) {
    std::vector<Ray> out = form.rays;
    for (const auto& l : form.lineality) {
        out.push_back(l);
        out.push_back(Int(-1) * l);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Ray> canonicalize_generators(std::vector<Ray> gens) {
    for (auto& g : gens) g = normalize_ray(g);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty()) return {};

    // Lineality members are the generators whose negation stays in the hull.
    // Cones inside the positive orthant are pointed, which skips the scan;
    // every state cone in this domain is of that kind.
    std::vector<Ray> marked;
    bool orthant = true;
    for (const auto& g : gens)
        for (const auto& x : g)
            if (x < 0) {
                orthant = false;
                break;
            }
    if (!orthant) {
        for (const auto& g : gens) {
            Vec8 neg = Rat(-1) * to_vec8(g);
            if (in_conic_hull(gens, neg)) marked.push_back(g);
        }
    }

    const Echelon ech = rref(marked);
    std::vector<Ray> reduced;
    for (const auto& g : gens) {
        auto r = reduce_mod(g, ech);
        if (r) reduced.push_back(*r);
    }
    std::sort(reduced.begin(), reduced.end());
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

    std::vector<Ray> line_cols;
    for (const auto& l : ech.basis) {
        line_cols.push_back(l);
        line_cols.push_back(Int(-1) * l);
    }

    // Drop conically redundant rays; in the pointed quotient the surviving
    // set is exactly the extreme rays, independent of removal order.
    std::vector<Ray> kept = reduced;
    for (const auto& r : reduced) {
        std::vector<Ray> cols = line_cols;
        for (const auto& other : kept)
            if (other != r) cols.push_back(other);
        if (!cols.empty() && in_conic_hull(cols, to_vec8(r)))
            kept.erase(std::find(kept.begin(), kept.end(), r));
    }

    GeneratorForm form{ech.basis, std::move(kept)};
    return flatten(form);
}

}  // namespace pslat::dd
