#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "cylsolid/error.hpp"
#include "cylsolid/oracle.hpp"
#include "cylsolid/quadrature.hpp"

namespace cylsolid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;

// Antiderivative of sin^2.
double sin2_integral(double theta) noexcept
{
    return theta / 2 - std::sin(2 * theta) / 4;
}

OracleEstimate from_result(const QuadratureResult& q, double abs_tol)
{
    OracleEstimate est;
    est.method = OracleMethod::Quadrature;
    est.value = q.value;
    est.uncertainty = abs_tol;
    est.error_estimate = q.error;
    est.panels = q.panels;
    return est;
}

void check_tolerance(double abs_tol)
{
    if (!(abs_tol >= kMinQuadratureTolerance))
        throw Error(ErrorCode::InvalidArgument, "quadrature tolerance must be at least 1e-12");
}

// Integrates g over [lo, hi] subset of [-phi0, phi0] through phi = phi0 sin u.
// The square-root edges of rho+- at +-phi0 become linear in u.
QuadratureResult integrate_silhouette(const std::function<double(double)>& g, double phi0,
                                      double lo, double hi, const QuadratureOptions& options)
{
    auto to_u = [phi0](double phi) { return std::asin(std::clamp(phi / phi0, -1.0, 1.0)); };
    auto h = [&](double u) { return g(phi0 * std::sin(u)) * phi0 * std::cos(u); };
    return integrate(h, to_u(lo), to_u(hi), options);
}

// Integrates over a CaseIII azimuth range, splitting where the radicand of
// rho+ is smallest.
QuadratureResult integrate_half_plane(const std::function<double(double)>& g, double lo, double hi,
                                      const QuadratureOptions& options)
{
    std::vector<double> points{lo};
    for (double p : {-kHalfPi, kHalfPi}) {
        if (lo < p && p < hi)
            points.push_back(p);
    }
    points.push_back(hi);
    return integrate(g, std::span<const double>(points), options);
}

double lateral_integrand(double L, double rho, double alpha, double phi)
{
    return std::cos(alpha + phi) * (std::atan2(L, rho) + L * rho / (L * L + rho * rho)) /
           (2 * kPi);
}

OracleEstimate quad_lateral(bool far, double L, double d, double r, double alpha, double abs_tol)
{
    check_tolerance(abs_tol);
    if (!(r > 0 && L >= 0 && alpha >= 0 && alpha <= kPi) || (d < r && !effectively_equal(d, r)))
        throw Error(ErrorCode::DomainError, "lateral integral needs d >= r > 0 and alpha in [0, pi]");
    const double dd = effectively_equal(d, r) ? r : d;
    const SilhouetteAngles angles = *silhouette_angles(dd, r);
    if (alpha >= angles.alphac)
        return from_result({}, abs_tol);
    const double hi = alpha < angles.alpha1 ? angles.phi0 : kHalfPi - alpha;
    auto g = [&](double phi) {
        const RhoPair rho = rho_pm(phi, dd, r);
        return lateral_integrand(L, far ? rho.plus : rho.minus, alpha, phi);
    };
    QuadratureOptions options;
    options.abs_tol = abs_tol;
    return from_result(integrate_silhouette(g, angles.phi0, -angles.phi0, hi, options), abs_tol);
}

} // namespace

OracleEstimate quad_f1(double L, double d, double r, double alpha, double abs_tol)
{
    return quad_lateral(false, L, d, r, alpha, abs_tol);
}

OracleEstimate quad_f2(double L, double d, double r, double alpha, double abs_tol)
{
    return quad_lateral(true, L, d, r, alpha, abs_tol);
}

OracleEstimate quad_f3(double L, double d, double r, double alpha, double abs_tol)
{
    check_tolerance(abs_tol);
    if (!(r > 0 && d >= 0 && d < r && L >= 0 && alpha >= 0 && alpha <= kPi))
        throw Error(ErrorCode::DomainError, "disk integral needs 0 <= d < r and alpha in [0, pi]");
    auto g = [&](double phi) {
        return lateral_integrand(L, rho_pm(phi, d, r).plus, alpha, phi);
    };
    QuadratureOptions options;
    options.abs_tol = abs_tol;
    OracleEstimate est =
        from_result(integrate_half_plane(g, -kHalfPi - alpha, kHalfPi - alpha, options), abs_tol);
    est.value = 0.5 - est.value;
    return est;
}

OracleEstimate quad_omega(const CanonicalCase& c, double abs_tol, std::size_t initial_panels)
{
    check_tolerance(abs_tol);
    QuadratureOptions options;
    options.abs_tol = abs_tol;
    options.initial_panels = initial_panels;

    const auto range = phi_limits(c);
    if (!range)
        return from_result({}, abs_tol);

    auto surface_term = [&](Surface which, double phi) {
        const AngleRange theta = theta_limits(c, which, phi);
        return sin2_integral(theta.hi) - sin2_integral(theta.lo);
    };
    auto g = [&](double phi) {
        double polar = 0;
        switch (c.id) {
        case CaseId::CaseI:
            polar = surface_term(Surface::Cylinder, phi);
            break;
        case CaseId::CaseII:
            polar = surface_term(Surface::Cylinder, phi) + surface_term(Surface::NearCap, phi);
            break;
        case CaseId::CaseIII:
            polar = surface_term(Surface::NearCap, phi);
            break;
        }
        return std::cos(c.alpha + phi) * polar / kPi;
    };

    if (c.id == CaseId::CaseIII)
        return from_result(integrate_half_plane(g, range->lo, range->hi, options), abs_tol);
    const double phi0 = silhouette_angles(c.d, c.r)->phi0;
    return from_result(integrate_silhouette(g, phi0, range->lo, range->hi, options), abs_tol);
}

} // namespace cylsolid
