#include "pslat/rational.hpp"

#include <nlohmann/json.hpp>

namespace pslat {

Rat parse_rational(std::string_view text) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Vec8 vec8_from_strings(const std::array<std::string, kDim>& parts) {
    Vec8 v;
    for (std::size_t i = 0; i < kDim; ++i) v[i] = parse_rational(parts[i]);
    return v;
}

Vec8 to_vec8(const Ray& r) {
    Vec8 v;
    for (std::size_t i = 0; i < kDim; ++i) v[i] = Rat(r[i]);
    return v;
}

bool is_zero(const Vec8& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool is_zero(const Ray& r) {
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

Rat pairing(const Vec8& p, const Vec8& q) {
    Rat acc = 0;
    for (std::size_t i = 0; i < kDim; ++i) acc += p[i] * q[i];
    return acc;
}

Int pairing(const Ray& p, const Ray& q) {
    Int acc = 0;
    for (std::size_t i = 0; i < kDim; ++i) acc += p[i] * q[i];
    return acc;
}

Rat pairing(const Vec8& p, const Ray& q) {
    Rat acc = 0;
    for (std::size_t i = 0; i < kDim; ++i) acc += p[i] * Rat(q[i]);
    return acc;
}

Ray normalize_ray(const Vec8& v) {
    if (is_zero(v)) throw ZeroVectorError();
    // Clear denominators, then divide out the content.
    Int scale = 1;
    for (const auto& x : v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    Ray r;
    for (std::size_t i = 0; i < kDim; ++i) {
        Rat scaled = v[i] * Rat(scale);
        r[i] = scaled.get_num();  // exact: scale is a multiple of every denominator
    }
    return normalize_ray(r);
}

Ray normalize_ray(const Ray& v) {
    if (is_zero(v)) throw ZeroVectorError();
    Int g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    Ray r;
    for (std::size_t i = 0; i < kDim; ++i) r[i] = v[i] / g;
    return r;
}

Vec8 unit_vec(int i) {
    Vec8 v{};
    v.at(static_cast<std::size_t>(i) - 1) = 1;
    return v;
}

Ray unit_ray(int i) {
    Ray r{};
    r.at(static_cast<std::size_t>(i) - 1) = 1;
    return r;
}

Ray ray_of(std::initializer_list<int> plus, std::initializer_list<int> minus) {
    Ray r{};
    for (int i : plus) r.at(static_cast<std::size_t>(i) - 1) += 1;
    for (int i : minus) r.at(static_cast<std::size_t>(i) - 1) -= 1;
    return r;
}

Vec8 operator+(const Vec8& a, const Vec8& b) {
    Vec8 out;
    for (std::size_t i = 0; i < kDim; ++i) out[i] = a[i] + b[i];
    return out;
}

Vec8 operator-(const Vec8& a, const Vec8& b) {
    Vec8 out;
    for (std::size_t i = 0; i < kDim; ++i) out[i] = a[i] - b[i];
    return out;
}

Vec8 operator*(const Rat& s, const Vec8& v) {
    Vec8 out;
    for (std::size_t i = 0; i < kDim; ++i) out[i] = s * v[i];
    return out;
}

Ray operator+(const Ray& a, const Ray& b) {
    Ray out;
    for (std::size_t i = 0; i < kDim; ++i) out[i] = a[i] + b[i];
    return out;
}

Ray operator-(const Ray& a, const Ray& b) {
    Ray out;
    for (std::size_t i = 0; i < kDim; ++i) out[i] = a[i] - b[i];
    return out;
}

Ray operator*(const Int& s, const Ray& r) {
    Ray out;
    for (std::size_t i = 0; i < kDim; ++i) out[i] = s * r[i];
    return out;
}

nlohmann::json vec8_to_json(const Vec8& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

Vec8 vec8_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != kDim)
        throw std::invalid_argument("vector JSON must be an array of 8 entries");
    Vec8 v;
    for (std::size_t i = 0; i < kDim; ++i) {
        const auto& e = j[i];
        if (e.is_string())
            v[i] = parse_rational(e.get<std::string>());
        else if (e.is_number_integer())
            v[i] = Rat(static_cast<long>(e.get<long long>()));
        else
            throw std::invalid_argument("vector entries must be strings or integers");
    }
    return v;
}

nlohmann::json ray_to_json(const Ray& r) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : r) arr.push_back(x.get_str());
    return arr;
}

Ray ray_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != kDim)
        throw std::invalid_argument("ray JSON must be an array of 8 entries");
    Ray r;
    for (std::size_t i = 0; i < kDim; ++i) {
        const auto& e = j[i];
        if (e.is_string())
            r[i] = Int(e.get<std::string>());
        else if (e.is_number_integer())
            r[i] = Int(static_cast<long>(e.get<long long>()));
        else
            throw std::invalid_argument("ray entries must be strings or integers");
    }
    return r;
}

}  // namespace pslat
