#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <nlohmann/json_fwd.hpp>

#include "pslat/errors.hpp"

namespace pslat {

// Exact scalars. mpq_class values are kept canonical (lowest terms, positive
// denominator); every construction path below canonicalizes.
using Int = mpz_class;
using Rat = mpq_class;

inline constexpr std::size_t kDim = 8;

// A GHZ-diagonal state or witness in the coefficient identification with R^8.
// Entries are indexed 1..8 in the lexicographic GHZ-basis order; entry i lives
// at position i-1.
using Vec8 = std::array<Rat, kDim>;

// Integer direction vector. A *normalized* ray is primitive (gcd of entries 1)
// and nonzero, so positively proportional vectors compare equal.
using Ray = std::array<Int, kDim>;

Rat parse_rational(std::string_view text);  // "p/q" or "p", arbitrary precision
std::string to_string(const Rat& r);        // inverse of parse_rational

Vec8 vec8_from_strings(const std::array<std::string, kDim>& parts);
Vec8 to_vec8(const Ray& r);

bool is_zero(const Vec8& v);
bool is_zero(const Ray& r);

Rat pairing(const Vec8& p, const Vec8& q);
Int pairing(const Ray& p, const Ray& q);
Rat pairing(const Vec8& p, const Ray& q);

// Unique primitive integer vector positively proportional to v.
Ray normalize_ray(const Vec8& v);  // throws ZeroVectorError
Ray normalize_ray(const Ray& v);   // throws ZeroVectorError

// 1-based basis helpers matching the GHZ index convention.
Vec8 unit_vec(int i);
Ray unit_ray(int i);

// e.g. ray_of({4,5,8}, {1}) == -e1+e4+e5+e8. Indices are 1-based.
Ray ray_of(std::initializer_list<int> plus, std::initializer_list<int> minus = {});

Vec8 operator+(const Vec8& a, const Vec8& b);
Vec8 operator-(const Vec8& a, const Vec8& b);
Vec8 operator*(const Rat& s, const Vec8& v);

Ray operator+(const Ray& a, const Ray& b);
Ray operator-(const Ray& a, const Ray& b);
Ray operator*(const Int& s, const Ray& r);

// JSON form: array of 8 strings, "p/q" or plain integer. Exact round trip.
nlohmann::json vec8_to_json(const Vec8& v);
Vec8 vec8_from_json(const nlohmann::json& j);
nlohmann::json ray_to_json(const Ray& r);
Ray ray_from_json(const nlohmann::json& j);

}  // namespace pslat
