#pragma once

#include <optional>
#include <string_view>

namespace cylsolid {

/// Relative window |d - r| <= kEqualRadiusTolerance * r in which the source
/// is treated as lying on the lateral surface (d == r).
inline constexpr double kEqualRadiusTolerance = 1e-9;

/// Negative radicands of magnitude below kRadicandTolerance * r^2 are
/// rounding noise at |phi| = phi0 and are clamped to zero.
inline constexpr double kRadicandTolerance = 1e-12;

/// Raw user geometry in the source frame.
///
/// The source sits at the origin, the cylinder axis is parallel to z at
/// perpendicular distance d, and the end planes are z = z1 and z = z2.
/// alpha is the angle between the source direction and the horizontal line
/// from the source to the cylinder axis.
struct CylinderScene {
    double r = 1.0;
    double d = 2.0;
    double z1 = -1.0;
    double z2 = 1.0;
    double alpha = 0.0;
};

enum class CaseId {
    CaseI,   ///< beside the lateral surface, between the end planes (d >= r)
    CaseII,  ///< beyond an end plane, outside the lateral surface (d >= r)
    CaseIII, ///< beyond an end plane, over the near disk (d < r)
};

std::string_view to_string(CaseId id) noexcept;

/// Scene reduced to the working parameters of one of the three cases.
///
/// CaseI: L1 and L2 are the distances to the two end planes.
/// CaseII: L1 is the near cap, L2 the far cap, 0 < L1 < L2.
/// CaseIII: L1 is the near cap; L2 is kept for reconstruction only.
struct CanonicalCase {
    CaseId id = CaseId::CaseI;
    double L1 = 0.0;
    double L2 = 0.0;
    double d = 0.0;
    double r = 1.0;
    double alpha = 0.0; ///< |alpha| in [0, pi]
    /// Source lies exactly in an end plane with d >= r (CaseI with L1 or L2 zero).
    bool end_plane = false;

    /// Builds a case directly, enforcing the per-case invariants.
    /// Throws Error(AdjacentCap) for CaseII with L1 == 0.
    static CanonicalCase make(CaseId id, double L1, double L2, double d, double r,
                              double alpha);

    friend bool operator==(const CanonicalCase&, const CanonicalCase&) = default;
};

/// phi0 = arcsin(r/d), alpha1 = pi/2 - phi0, alphac = pi/2 + phi0.
struct SilhouetteAngles {
    double phi0;
    double alpha1;
    double alphac;
};

bool effectively_equal(double d, double r) noexcept;

/// Defined only for d >= r (including the effectively-equal window).
std::optional<SilhouetteAngles> silhouette_angles(double d, double r) noexcept;

/// Reduces alpha modulo 2*pi into [-pi, pi] and returns its magnitude.
double normalize_alpha(double alpha) noexcept;

/// Throws Error(InvalidScene) unless r > 0, d >= 0, z1 < z2 and all finite.
void validate(const CylinderScene& scene);

CanonicalCase classify(const CylinderScene& scene);

/// A scene that classifies back to `c`. CaseIII without a far cap gets a
/// unit-radius-length cylinder; the far cap never affects the result there.
CylinderScene to_scene(const CanonicalCase& c);

struct RhoPair {
    double minus;
    double plus;
};

/// Near and far intersection distances of the azimuthal ray phi with the
/// circular cross-section of the cylinder.
RhoPair rho_pm(double phi, double d, double r);

struct AngleRange {
    double lo;
    double hi;
};

/// Azimuthal integration range; nullopt when the detector is not illuminated.
std::optional<AngleRange> phi_limits(const CanonicalCase& c);

enum class Surface {
    Cylinder, ///< lateral surface
    NearCap,  ///< near end disk
};

/// Polar integration range for one surface at azimuth phi.
/// Throws Error(DomainError) for a surface the case does not see.
AngleRange theta_limits(const CanonicalCase& c, Surface which, double phi);

} // namespace cylsolid
