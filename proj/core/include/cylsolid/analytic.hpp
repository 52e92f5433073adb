#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cylsolid/geometry.hpp"

namespace cylsolid {

/// Below this relative axis offset (d <= kAxisTolerance * r) CaseIII uses
/// the on-axis closed form.
inline constexpr double kAxisTolerance = 1e-12;

/// Assembled values may stray this far outside [0, 1] through rounding;
/// anything further is reported as NumericalInconsistency.
inline constexpr double kRangeTolerance = 1e-9;

enum class Integral { F1, F2, F3 };

/// Which closed form produced an F value.
enum class Branch {
    Flat,        ///< L == 0
    Dark,        ///< alpha >= alphac, nothing illuminated
    Even,        ///< alpha < alpha1, pure cos(alpha) scaling
    Transition,  ///< alpha1 <= alpha < alphac
    EqualRadius, ///< d == r within kEqualRadiusTolerance
    OnAxis,      ///< CaseIII with d == 0
    OffAxis,     ///< CaseIII general form with the half-angle branch fix
};

std::string_view to_string(Integral which) noexcept;
std::string_view to_string(Branch branch) noexcept;

/// Inputs, intermediates and result of one F evaluation. Intermediates a
/// branch never forms stay empty. `a` and `b` are the half-angle tangents
/// at the lower and upper azimuth limits (a1/b1, a2/b2 or a3/b3).
struct AnalyticTerms {
    Integral integral = Integral::F1;
    Branch branch = Branch::Flat;
    double L = 0;
    double d = 0;
    double r = 0;
    double alpha = 0;
    double value = 0;

    std::optional<double> m;
    std::optional<double> sqrt_one_minus_m2;
    std::optional<double> rho_tilde_minus;
    std::optional<double> rho_tilde_plus;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> E;
    std::optional<double> G;
    std::optional<double> H;
    std::optional<double> z;
    std::optional<double> dt1;
    std::optional<double> dt2;
};

/// F1: lateral-surface integral against the near intersection rho-.
/// Requires L >= 0, d >= r > 0 and alpha in [0, pi].
AnalyticTerms evaluate_f1(double L, double d, double r, double alpha);
/// F2: the same against the far intersection rho+; same domain as F1.
AnalyticTerms evaluate_f2(double L, double d, double r, double alpha);
/// F3: near-disk integral for d < r over the full illuminated half plane.
AnalyticTerms evaluate_f3(double L, double d, double r, double alpha);

inline double f1(double L, double d, double r, double alpha)
{
    return evaluate_f1(L, d, r, alpha).value;
}
inline double f2(double L, double d, double r, double alpha)
{
    return evaluate_f2(L, d, r, alpha).value;
}
inline double f3(double L, double d, double r, double alpha)
{
    return evaluate_f3(L, d, r, alpha).value;
}

/// Antiderivatives in phi of the rho- and rho+ integrands, valid for d > r
/// and |phi| <= phi0. F1 and F2 are their differences between limits.
double f1_antiderivative(double L, double d, double r, double alpha, double phi);
double f2_antiderivative(double L, double d, double r, double alpha, double phi);

struct OmegaBreakdown {
    double cylinder; ///< lateral surface
    double circle;   ///< near end disk
};

/// Fraction of the emission of a cosine source that reaches the detector.
struct SolidAngle {
    double value = 0;
    std::optional<OmegaBreakdown> breakdown; ///< CaseII only
};

/// Assembles the solid angle of a classified case from F1, F2 and F3.
/// When `trace` is given, every F evaluation used is appended to it.
SolidAngle omega(const CanonicalCase& c, std::vector<AnalyticTerms>* trace = nullptr);

inline SolidAngle omega(const CylinderScene& scene)
{
    return omega(classify(scene));
}

} // namespace cylsolid
