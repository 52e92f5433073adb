#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "cylsolid/geometry.hpp"

namespace cylsolid {

struct Vec3 {
    double x;
    double y;
    double z;
};

/// Per-partition stream generator; seeded through derive_stream_seed.
using Rng = std::mt19937_64;

inline constexpr std::string_view kRngName = "mt19937_64/splitmix64";

/// splitmix64 finalizer (Steele, Lea, Flood 2014 constants).
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Seed of partition `index`: splitmix64(seed ^ splitmix64(index)).
constexpr std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) noexcept
{
    return splitmix64(seed ^ splitmix64(index));
}

/// Uniform in (0, 1] from the top 53 bits of one draw.
inline double uniform_open_closed(Rng& rng) noexcept
{
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

/// Cosine-law direction about +x: cos(angle to x) = sqrt(u), azimuth uniform.
Vec3 sample_cosine_direction(Rng& rng) noexcept;

/// Uniform direction on the full sphere; used to self-test the tracer.
Vec3 sample_isotropic_direction(Rng& rng) noexcept;

/// Exact test of the ray from the origin along `dir` against the closed
/// finite cylinder of `scene`, whose axis is parallel to z through
/// (d cos alpha, d sin alpha). The ray hits when it meets the solid at some
/// t > 0; a ray leaving a surface it starts on is a miss, one entering is a
/// hit at t = 0, and tangential grazes are hits.
bool ray_hits_cylinder(const CylinderScene& scene, const Vec3& dir) noexcept;

} // namespace cylsolid
