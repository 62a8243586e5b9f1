#pragma once

#include <complex>
#include <cmath>
#include <cstdint>
#include <vector>

namespace extremal {

using Complex = std::complex<double>;

/// A point of C^n; the dimension n is the vector length.
using AffinePoint = std::vector<Complex>;

inline double norm(const AffinePoint& z) {
    double s = 0.0;
    for (const Complex& c : z) s += std::norm(c);
    return std::sqrt(s);
}

inline double distance(const AffinePoint& a, const AffinePoint& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

inline bool is_finite(const AffinePoint& z) {
    for (const Complex& c : z)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    return splitmix64(seed ^ splitmix64(salt));
}

/// Quantized hash of a point, used for memo keys and per-point random
/// streams. Points closer than `quantum` per component may collide, which
/// is harmless for both uses.
inline std::uint64_t hash_point(const AffinePoint& z, double quantum = 1e-9) {
    std::uint64_t h = 0x2545f4914f6cdd1dULL ^ static_cast<std::uint64_t>(z.size());
    for (const Complex& c : z) {
        const auto qr = static_cast<std::int64_t>(std::llround(c.real() / quantum));
        const auto qi = static_cast<std::int64_t>(std::llround(c.imag() / quantum));
        h = splitmix64(h ^ static_cast<std::uint64_t>(qr));
        h = splitmix64(h ^ static_cast<std::uint64_t>(qi));
    }
    return h;
}

}  // namespace extremal
