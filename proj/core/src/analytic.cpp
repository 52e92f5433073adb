#include "cylsolid/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cylsolid/error.hpp"

namespace cylsolid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kTwoPi = 2 * std::numbers::pi;

// Quantities shared by every closed form: m = 2dr/S with S = L^2 + d^2 + r^2,
// sqrt(1 - m^2) = H/S, and the two ratios sqrt((1 +/- m)/(1 -/+ m)). All are
// built from the factored sums so nothing cancels as m -> 1.
struct Moduli {
    double m;
    double s;     // sqrt(1 - m^2)
    double p;     // sqrt((1 + m)/(1 - m))
    double k;     // sqrt((1 - m)/(1 + m))
    double H;
    double p_minus_1;
    double k_minus_1;
    double inv_s_minus_1; // 1/s - 1
};

Moduli moduli(double L, double d, double r)
{
    const double L2 = L * L;
    const double sum = L2 + d * d + r * r;
    const double far = L2 + (d + r) * (d + r);
    const double near = L2 + (d - r) * (d - r);
    const double H = std::sqrt(far * near);
    const double m = 2 * d * r / sum;
    const double s = H / sum;
    // far - near = 4dr exactly; no differences of nearly equal roots.
    const double root_sum = std::sqrt(far) + std::sqrt(near);
    return {m,
            s,
            std::sqrt(far / near),
            std::sqrt(near / far),
            H,
            4 * d * r / (std::sqrt(near) * root_sum),
            -4 * d * r / (std::sqrt(far) * root_sum),
            m * m / (s * (1 + s))};
}

// arctan(t x)/s - arctan(x) with t - 1 given, kept accurate when t -> 1 and
// s -> 1 make the two terms nearly cancel.
double scaled_atan_gap(double x, double t, double t_minus_1, const Moduli& mod)
{
    const double gap = std::atan(t_minus_1 * x / (1 + t * x * x));
    return gap / mod.s + std::atan(x) * mod.inv_s_minus_1;
}

void record(AnalyticTerms& t, const Moduli& mod)
{
    t.m = mod.m;
    t.sqrt_one_minus_m2 = mod.s;
    t.H = mod.H;
}

AnalyticTerms start(Integral which, double L, double d, double r, double alpha)
{
    AnalyticTerms t;
    t.integral = which;
    t.L = L;
    t.d = d;
    t.r = r;
    t.alpha = alpha;
    return t;
}

AnalyticTerms finish(AnalyticTerms t, Branch branch, double value)
{
    t.branch = branch;
    t.value = value;
    return t;
}

[[noreturn]] void domain_failure(std::string_view fn, double L, double d, double r, double alpha)
{
    std::ostringstream os;
    os << fn << " is undefined at L=" << L << ", d=" << d << ", r=" << r
       << ", alpha=" << alpha;
    throw Error(ErrorCode::DomainError, os.str());
}

void check_common(std::string_view fn, double L, double d, double r, double alpha)
{
    const bool ok = std::isfinite(L) && std::isfinite(d) && std::isfinite(r) && L >= 0 &&
                    r > 0 && d >= 0 && alpha >= 0 && alpha <= kPi;
    if (!ok)
        domain_failure(fn, L, d, r, alpha);
}

void check_lateral(std::string_view fn, double L, double d, double r, double alpha)
{
    check_common(fn, L, d, r, alpha);
    if (d < r && !effectively_equal(d, r))
        domain_failure(fn, L, d, r, alpha);
}

double clamp_radicand(double x) noexcept { return x > 0 ? x : 0.0; }

} // namespace

std::string_view to_string(Integral which) noexcept
{
    switch (which) {
    case Integral::F1: return "F1";
    case Integral::F2: return "F2";
    case Integral::F3: return "F3";
    }
    return "Unknown";
}

std::string_view to_string(Branch branch) noexcept
{
    switch (branch) {
    case Branch::Flat: return "Flat";
    case Branch::Dark: return "Dark";
    case Branch::Even: return "Even";
    case Branch::Transition: return "Transition";
    case Branch::EqualRadius: return "EqualRadius";
    case Branch::OnAxis: return "OnAxis";
    case Branch::OffAxis: return "OffAxis";
    }
    return "Unknown";
}

AnalyticTerms evaluate_f1(double L, double d, double r, double alpha)
{
    check_lateral("F1", L, d, r, alpha);
    AnalyticTerms t = start(Integral::F1, L, d, r, alpha);
    if (L == 0)
        return finish(t, Branch::Flat, 0.0);

    const SilhouetteAngles angles = *silhouette_angles(d, r);
    if (alpha >= angles.alphac)
        return finish(t, Branch::Dark, 0.0);

    const double c = std::cos(alpha);
    const double sn = std::sin(alpha);
    if (effectively_equal(d, r))
        return finish(t, Branch::EqualRadius, (1 + c) / 4);

    const Moduli mod = moduli(L, d, r);
    record(t, mod);
    const double g0 = std::sqrt((d - r) * (d + r));
    const double q = std::sqrt((d - r) / (d + r));

    if (alpha < angles.alpha1) {
        t.a = -q;
        t.b = q;
        const double value =
            c / kPi *
            (r / d * std::atan2(L, g0) + L / d * scaled_atan_gap(q, mod.p, mod.p_minus_1, mod));
        return finish(t, Branch::Even, value);
    }

    const double E = std::sqrt(clamp_radicand((r - d * c) * (r + d * c)));
    const double rho_plus = d * sn + E;
    const double rho_minus = (d - r) * (d + r) / rho_plus;
    const double a1 = -q;
    const double b1 = c * rho_minus / (r + d - sn * rho_minus);
    t.E = E;
    t.rho_tilde_minus = rho_minus;
    t.rho_tilde_plus = rho_plus;
    t.a = a1;
    t.b = b1;

    const double A10 = std::atan2(L, rho_minus) - std::atan2(L, g0) * std::sin(alpha - angles.phi0);
    const double A11 = L / (2 * d) *
                       (2 / mod.s * (std::atan(mod.p * b1) - std::atan(mod.p * a1)) -
                        2 * (std::atan(b1) - std::atan(a1)));
    const double A12 =
        L / (2 * d) * std::log((L * L + rho_minus * rho_minus) / (L * L + g0 * g0));
    return finish(t, Branch::Transition, (A10 + c * A11 + sn * A12) / kTwoPi);
}

AnalyticTerms evaluate_f2(double L, double d, double r, double alpha)
{
    check_lateral("F2", L, d, r, alpha);
    AnalyticTerms t = start(Integral::F2, L, d, r, alpha);
    if (L == 0)
        return finish(t, Branch::Flat, 0.0);

    const SilhouetteAngles angles = *silhouette_angles(d, r);
    if (alpha >= angles.alphac)
        return finish(t, Branch::Dark, 0.0);

    const double c = std::cos(alpha);
    const double sn = std::sin(alpha);

    if (effectively_equal(d, r)) {
        const Moduli mod = moduli(L, r, r);
        record(t, mod);
        if (sn == 0)
            return finish(t, Branch::EqualRadius, 0.5 + L / (2 * r) * (1 - 1 / mod.s));
        // atan2(k cos, sin) is arctan(k cot alpha) on 0 < alpha < pi.
        const double bracket =
            std::atan(2 * (r / L) * sn) +
            c * L / r * (alpha - kPi + (kHalfPi + std::atan2(mod.k * c, sn)) / mod.s) -
            sn * L / (2 * r) * std::log1p(4 * r * r * sn * sn / (L * L));
        return finish(t, Branch::EqualRadius, (1 + c) / 4 - bracket / kTwoPi);
    }

    const Moduli mod = moduli(L, d, r);
    record(t, mod);
    const double g0 = std::sqrt((d - r) * (d + r));
    const double w = std::sqrt((d + r) / (d - r));

    if (alpha < angles.alpha1) {
        t.a = -w;
        t.b = w;
        const double value =
            c / kPi *
            (r / d * std::atan2(L, g0) - L / d * scaled_atan_gap(w, mod.k, mod.k_minus_1, mod));
        return finish(t, Branch::Even, value);
    }

    const double E = std::sqrt(clamp_radicand((r - d * c) * (r + d * c)));
    const double rho_plus = d * sn + E;
    const double a2 = -w;
    const double b2 = c * rho_plus / (r - d + sn * rho_plus);
    t.E = E;
    t.rho_tilde_minus = (d - r) * (d + r) / rho_plus;
    t.rho_tilde_plus = rho_plus;
    t.a = a2;
    t.b = b2;

    const double A20 = std::atan2(L, rho_plus) - std::atan2(L, g0) * std::sin(alpha - angles.phi0);
    const double A21 = L / (2 * d) *
                       (2 * (std::atan(b2) - std::atan(a2)) -
                        2 / mod.s * (std::atan(mod.k * b2) - std::atan(mod.k * a2)));
    const double A22 =
        L / (2 * d) * std::log((L * L + rho_plus * rho_plus) / (L * L + g0 * g0));
    return finish(t, Branch::Transition, (A20 + c * A21 + sn * A22) / kTwoPi);
}

AnalyticTerms evaluate_f3(double L, double d, double r, double alpha)
{
    check_common("F3", L, d, r, alpha);
    if (!(d < r))
        domain_failure("F3", L, d, r, alpha);
    AnalyticTerms t = start(Integral::F3, L, d, r, alpha);
    if (L == 0)
        return finish(t, Branch::Flat, 0.5);

    if (d <= kAxisTolerance * r) {
        const double value = 0.5 - (std::atan2(L, r) + L * r / (L * L + r * r)) / kPi;
        return finish(t, Branch::OnAxis, value);
    }

    const Moduli mod = moduli(L, d, r);
    record(t, mod);
    const double c = std::cos(alpha);
    const double sn = std::sin(alpha);
    const double dc = d * c;

    // E >= sqrt(r^2 - d^2) > 0 for d < r.
    const double E = std::sqrt((r - dc) * (r + dc));
    const double rho_plus = d * sn + E;
    const double rho_minus = (d - r) * (d + r) / rho_plus;
    const double G = L * L + (d - r) * (d + r);
    t.E = E;
    t.G = G;
    t.rho_tilde_minus = rho_minus;
    t.rho_tilde_plus = rho_plus;

    // Half-angle tangents at the azimuth limits. 1/a3 is formed directly:
    // a3 itself is 0/0 at alpha = pi/2, where 1/a3 passes smoothly through 0.
    const double b3 = c * rho_plus / (r - d * c * c + sn * E);
    const double inv_a3 = -c * (r - d) * rho_plus / ((r + d) * (r - d * c * c + sn * E));
    t.b = b3;
    t.a = 1 / inv_a3;

    const double cq = (r - d) * (r + d) - L * L;
    const double R = std::hypot(cq, 2 * L * E);
    const double z = cq >= 0 ? (cq + R) / (2 * L * E) : 2 * L * E / (R - cq);
    t.z = z;
    const double A30 = 2 * std::atan(z);

    // Both half-angle arctangents at the lower limit are taken through the
    // continuous form arctan(x) -> -pi/2 - arctan(1/x), which is valid on
    // the whole range and removes the jump of a3 at alpha = pi/2.
    const double dt1 = 2 * std::atan(dc / (r + E));
    const double dt2 = 2 * std::atan(G * dc / (E * mod.H + r * std::sqrt(mod.H * mod.H -
                                                                      4 * L * L * dc * dc)));
    t.dt1 = dt1;
    t.dt2 = dt2;

    // 2(pi/2 + dt1) - (2/s)(pi/2 + dt2), regrouped so each piece is O(d).
    const double one_minus_inv_s = -mod.m * mod.m / (mod.s * (1 + mod.s));
    const double bracket = kPi * one_minus_inv_s + 2 * (dt1 - dt2) + 2 * dt2 * one_minus_inv_s;
    const double A31 = -L / (2 * d) * bracket;
    const double A32 =
        -L / (2 * d) * std::log1p(4 * d * E * sn / (L * L + rho_minus * rho_minus));

    return finish(t, Branch::OffAxis, (A30 + c * A31 + sn * A32) / kTwoPi);
}

double f1_antiderivative(double L, double d, double r, double alpha, double phi)
{
    check_lateral("f1 antiderivative", L, d, r, alpha);
    const SilhouetteAngles angles = *silhouette_angles(d, r);
    if (std::abs(phi) > angles.phi0)
        domain_failure("f1 antiderivative", L, d, r, alpha);
    if (L == 0)
        return 0.0;

    const Moduli mod = moduli(L, d, r);
    const double rho = rho_pm(phi, d, r).minus;
    const double half_tan = rho * std::sin(phi) / (d + r - rho * std::cos(phi));
    const double A10 = std::sin(alpha + phi) * std::atan2(L, rho);
    const double A11 =
        L / (2 * d) * (2 / mod.s * std::atan(mod.p * half_tan) - 2 * std::atan(half_tan));
    const double A12 = L / (2 * d) * std::log(L * L + rho * rho);
    return (A10 + std::cos(alpha) * A11 + std::sin(alpha) * A12) / kTwoPi;
}

double f2_antiderivative(double L, double d, double r, double alpha, double phi)
{
    check_lateral("f2 antiderivative", L, d, r, alpha);
    if (effectively_equal(d, r))
        domain_failure("f2 antiderivative", L, d, r, alpha);
    const SilhouetteAngles angles = *silhouette_angles(d, r);
    if (std::abs(phi) > angles.phi0)
        domain_failure("f2 antiderivative", L, d, r, alpha);
    if (L == 0)
        return 0.0;

    const Moduli mod = moduli(L, d, r);
    const double rho = rho_pm(phi, d, r).plus;
    const double half_tan = rho * std::sin(phi) / (r - d + rho * std::cos(phi));
    const double A20 = std::sin(alpha + phi) * std::atan2(L, rho);
    const double A21 =
        L / (2 * d) * (2 * std::atan(half_tan) - 2 / mod.s * std::atan(mod.k * half_tan));
    const double A22 = L / (2 * d) * std::log(L * L + rho * rho);
    return (A20 + std::cos(alpha) * A21 + std::sin(alpha) * A22) / kTwoPi;
}

SolidAngle omega(const CanonicalCase& c, std::vector<AnalyticTerms>* trace)
{
    auto eval = [&](AnalyticTerms (*fn)(double, double, double, double), double L) {
        AnalyticTerms t = fn(L, c.d, c.r, c.alpha);
        if (trace)
            trace->push_back(t);
        return t.value;
    };

    SolidAngle result;
    switch (c.id) {
    case CaseId::CaseI:
        result.value = eval(evaluate_f1, c.L1) + eval(evaluate_f1, c.L2);
        break;
    case CaseId::CaseII: {
        const double far = eval(evaluate_f1, c.L2);
        const double near = eval(evaluate_f1, c.L1);
        const double near_plus = eval(evaluate_f2, c.L1);
        result.value = far - near_plus;
        result.breakdown = OmegaBreakdown{far - near, near - near_plus};
        break;
    }
    case CaseId::CaseIII:
        result.value = eval(evaluate_f3, c.L1);
        break;
    }

    if (!(result.value >= -kRangeTolerance && result.value <= 1 + kRangeTolerance)) {
        std::ostringstream os;
        os.precision(17);
        os << "assembled solid angle " << result.value << " lies outside [0, 1] for "
           << to_string(c.id) << " (L1=" << c.L1 << ", L2=" << c.L2 << ", d=" << c.d
           << ", r=" << c.r << ", alpha=" << c.alpha << ")";
        throw Error(ErrorCode::NumericalInconsistency, os.str());
    }
    result.value = std::clamp(result.value, 0.0, 1.0);
    return result;
}

} // namespace cylsolid
