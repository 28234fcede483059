#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "pslat/rational.hpp"

namespace pslat::testing {

inline Vec8 v8(std::initializer_list<long> xs) {
    Vec8 v{};
    std::size_t i = 0;
    for (long x : xs) v.at(i++) = Rat(x);
    return v;
}

inline Ray r8(std::initializer_list<long> xs) {
    Ray r{};
    std::size_t i = 0;
    for (long x : xs) r.at(i++) = Int(x);
    return r;
}

inline Rat random_rat(std::mt19937_64& gen, long lo = -9, long hi = 9) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, 9);
    Rat r(num(gen), den(gen));
    r.canonicalize();
    return r;
}

inline Vec8 random_vec(std::mt19937_64& gen, long lo = -9, long hi = 9) {
    Vec8 v;
    for (auto& x : v) x = random_rat(gen, lo, hi);
    return v;
}

inline Vec8 random_nonneg_vec(std::mt19937_64& gen, long hi = 9) {
    return random_vec(gen, 0, hi);
}

inline Ray random_ray(std::mt19937_64& gen, long lo = -3, long hi = 3) {
    std::uniform_int_distribution<long> entry(lo, hi);
    for (;;) {
        Ray r;
        bool nonzero = false;
        for (auto& x : r) {
            const long e = entry(gen);
            x = Int(e);
            if (e != 0) nonzero = true;
        }
        if (nonzero) return r;
    }
}

inline std::vector<Ray> random_ray_set(std::mt19937_64& gen, std::size_t max_count = 12,
                                       long lo = -3, long hi = 3) {
    std::uniform_int_distribution<std::size_t> count(1, max_count);
    std::vector<Ray> rays;
    const std::size_t n = count(gen);
    for (std::size_t i = 0; i < n; ++i) rays.push_back(random_ray(gen, lo, hi));
    return rays;
}

}  // namespace pslat::testing
