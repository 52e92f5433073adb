#include "cylsolid/ray_tracer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cylsolid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Interval {
    double lo;
    double hi;
};

// Parameter range along the ray inside the slab z1 <= z <= z2, or empty.
bool slab_interval(double z1, double z2, double wz, Interval& out) noexcept
{
    if (wz == 0) {
        if (z1 <= 0 && 0 <= z2) {
            out = {-kInf, kInf};
            return true;
        }
        return false;
    }
    const double t1 = z1 / wz;
    const double t2 = z2 / wz;
    out = {std::min(t1, t2), std::max(t1, t2)};
    return true;
}

// Parameter range inside the infinite cylinder of radius r about (cx, cy).
bool tube_interval(double cx, double cy, double r, double wx, double wy, Interval& out) noexcept
{
    const double a = wx * wx + wy * wy;
    const double px = -cx;
    const double py = -cy;
    const double c = px * px + py * py - r * r;
    if (a == 0) {
        if (c <= 0) {
            out = {-kInf, kInf};
            return true;
        }
        return false;
    }
    const double b = 2 * (px * wx + py * wy);
    const double disc = b * b - 4 * a * c;
    if (disc < 0)
        return false;
    const double root = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(root, b));
    double t1;
    double t2;
    if (q == 0) {
        t1 = t2 = 0;
    } else {
        t1 = q / a;
        t2 = c / q;
    }
    out = {std::min(t1, t2), std::max(t1, t2)};
    return true;
}

} // namespace

Vec3 sample_cosine_direction(Rng& rng) noexcept
{
    const double mu = std::sqrt(uniform_open_closed(rng));
    const double psi = 2 * std::numbers::pi * uniform_open_closed(rng);
    const double s = std::sqrt(std::max(0.0, 1 - mu * mu));
    return {mu, s * std::cos(psi), s * std::sin(psi)};
}

Vec3 sample_isotropic_direction(Rng& rng) noexcept
{
    const double mu = 2 * uniform_open_closed(rng) - 1;
    const double psi = 2 * std::numbers::pi * uniform_open_closed(rng);
    const double s = std::sqrt(std::max(0.0, 1 - mu * mu));
    return {mu, s * std::cos(psi), s * std::sin(psi)};
}

bool ray_hits_cylinder(const CylinderScene& scene, const Vec3& dir) noexcept
{
    Interval slab;
    if (!slab_interval(scene.z1, scene.z2, dir.z, slab))
        return false;
    Interval tube;
    const double cx = scene.d * std::cos(scene.alpha);
    const double cy = scene.d * std::sin(scene.alpha);
    if (!tube_interval(cx, cy, scene.r, dir.x, dir.y, tube))
        return false;
    const double lo = std::max(slab.lo, tube.lo);
    const double hi = std::min(slab.hi, tube.hi);
    return lo <= hi && hi > 0;
}

} // namespace cylsolid
