#include "cylsolid/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cylsolid/error.hpp"

namespace cylsolid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;

bool finite(double x) noexcept { return std::isfinite(x); }

[[noreturn]] void invalid(const std::string& what)
{
    throw Error(ErrorCode::InvalidScene, what);
}

bool wide(double d, double r) noexcept { return d >= r || effectively_equal(d, r); }

} // namespace

std::string_view to_string(CaseId id) noexcept
{
    switch (id) {
    case CaseId::CaseI: return "CaseI";
    case CaseId::CaseII: return "CaseII";
    case CaseId::CaseIII: return "CaseIII";
    }
    return "Unknown";
}

bool effectively_equal(double d, double r) noexcept
{
    return std::abs(d - r) <= kEqualRadiusTolerance * r;
}

std::optional<SilhouetteAngles> silhouette_angles(double d, double r) noexcept
{
    if (effectively_equal(d, r))
        return SilhouetteAngles{kHalfPi, 0.0, kPi};
    if (d < r)
        return std::nullopt;
    // atan2 form keeps full relative accuracy as d -> r, where arcsin(r/d)
    // loses half its digits.
    const double g0 = std::sqrt((d - r) * (d + r));
    const double phi0 = std::atan2(r, g0);
    const double alpha1 = std::atan2(g0, r);
    return SilhouetteAngles{phi0, alpha1, kPi - alpha1};
}

double normalize_alpha(double alpha) noexcept
{
    return std::abs(std::remainder(alpha, 2 * kPi));
}

void validate(const CylinderScene& s)
{
    if (!finite(s.r) || !finite(s.d) || !finite(s.z1) || !finite(s.z2) || !finite(s.alpha))
        invalid("scene parameters must be finite");
    if (s.r <= 0)
        invalid("radius must be positive");
    if (s.d < 0)
        invalid("axis distance must be non-negative");
    if (!(s.z1 < s.z2))
        invalid("end planes must satisfy z1 < z2");
}

CanonicalCase CanonicalCase::make(CaseId id, double L1, double L2, double d, double r,
                                  double alpha)
{
    if (!finite(L1) || !finite(L2) || !finite(d) || !finite(r) || !finite(alpha))
        invalid("case parameters must be finite");
    if (r <= 0)
        invalid("radius must be positive");
    if (d < 0 || L1 < 0 || L2 < 0)
        invalid("distances must be non-negative");
    if (alpha < 0 || alpha > kPi)
        invalid("alpha must be normalized into [0, pi]");

    CanonicalCase c{id, L1, L2, d, r, alpha, false};
    switch (id) {
    case CaseId::CaseI:
        if (!wide(d, r))
            invalid("CaseI requires d >= r");
        if (L1 == 0 && L2 == 0)
            invalid("CaseI requires a cylinder of positive length");
        c.end_plane = (L1 == 0 || L2 == 0);
        break;
    case CaseId::CaseII:
        if (!wide(d, r))
            invalid("CaseII requires d >= r");
        if (L1 == 0)
            throw Error(ErrorCode::AdjacentCap,
                        "CaseII with L1 = 0 puts the source in the near end plane; "
                        "describe it as CaseI with L2 = 0 or move z1 off zero");
        if (!(L1 < L2))
            invalid("CaseII requires L1 < L2");
        break;
    case CaseId::CaseIII:
        if (wide(d, r))
            invalid("CaseIII requires d < r");
        break;
    }
    if (id != CaseId::CaseIII && effectively_equal(d, r))
        c.d = r;
    return c;
}

CanonicalCase classify(const CylinderScene& s)
{
    validate(s);
    const double alpha = normalize_alpha(s.alpha);
    double z1 = s.z1;
    double z2 = s.z2;

    if (wide(s.d, s.r)) {
        // 0.0 - z1 keeps a zero distance positive.
        if (z1 <= 0 && 0 <= z2)
            return CanonicalCase::make(CaseId::CaseI, z2, 0.0 - z1, s.d, s.r, alpha);
        if (z2 < 0) {
            z1 = -s.z2;
            z2 = -s.z1;
        }
        return CanonicalCase::make(CaseId::CaseII, z1, z2, s.d, s.r, alpha);
    }

    if (z1 < 0 && 0 < z2)
        throw Error(ErrorCode::SourceInsideDetector,
                    "source lies inside the cylinder (d < r, z1 < 0 < z2)");
    if (z2 <= 0) {
        z1 = 0.0 - s.z2;
        z2 = -s.z1;
    }
    return CanonicalCase::make(CaseId::CaseIII, z1, z2, s.d, s.r, alpha);
}

CylinderScene to_scene(const CanonicalCase& c)
{
    switch (c.id) {
    case CaseId::CaseI:
        return {c.r, c.d, -c.L2, c.L1, c.alpha};
    case CaseId::CaseII:
        return {c.r, c.d, c.L1, c.L2, c.alpha};
    case CaseId::CaseIII:
        return {c.r, c.d, c.L1, c.L2 > c.L1 ? c.L2 : c.L1 + c.r, c.alpha};
    }
    return {};
}

RhoPair rho_pm(double phi, double d, double r)
{
    const double ds = d * std::sin(phi);
    double radicand = (r - ds) * (r + ds);
    if (radicand < 0) {
        if (radicand < -kRadicandTolerance * r * r)
            throw Error(ErrorCode::DomainError, "azimuth lies outside the cylinder silhouette");
        radicand = 0;
    }
    const double root = std::sqrt(radicand);
    const double dc = d * std::cos(phi);
    // rho- * rho+ = d^2 - r^2; form the root without cancellation and
    // recover the other from the product.
    const double product = (d - r) * (d + r);
    if (dc >= 0) {
        const double plus = dc + root;
        return {plus > 0 ? product / plus : 0.0, plus};
    }
    const double minus = dc - root;
    return {minus, minus < 0 ? product / minus : 0.0};
}

std::optional<AngleRange> phi_limits(const CanonicalCase& c)
{
    if (c.id == CaseId::CaseIII)
        return AngleRange{-kHalfPi - c.alpha, kHalfPi - c.alpha};

    const auto angles = silhouette_angles(c.d, c.r);
    if (!angles || c.alpha >= angles->alphac)
        return std::nullopt;
    if (c.alpha < angles->alpha1)
        return AngleRange{-angles->phi0, angles->phi0};
    return AngleRange{-angles->phi0, kHalfPi - c.alpha};
}

AngleRange theta_limits(const CanonicalCase& c, Surface which, double phi)
{
    const RhoPair rho = rho_pm(phi, c.d, c.r);
    switch (c.id) {
    case CaseId::CaseI:
        if (which != Surface::Cylinder)
            break;
        return {kHalfPi - std::atan2(c.L1, rho.minus), kHalfPi + std::atan2(c.L2, rho.minus)};
    case CaseId::CaseII:
        if (which == Surface::Cylinder)
            return {kHalfPi + std::atan2(c.L1, rho.minus), kHalfPi + std::atan2(c.L2, rho.minus)};
        return {kHalfPi + std::atan2(c.L1, rho.plus), kHalfPi + std::atan2(c.L1, rho.minus)};
    case CaseId::CaseIII:
        if (which != Surface::NearCap)
            break;
        return {kHalfPi + std::atan2(c.L1, rho.plus), kPi};
    }
    throw Error(ErrorCode::DomainError,
                std::string(to_string(c.id)) + " has no contribution from that surface");
}

} // namespace cylsolid
