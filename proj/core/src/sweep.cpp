#include "cylsolid/sweep.hpp"

#include <cmath>

#include "cylsolid/analytic.hpp"
#include "cylsolid/oracle.hpp"

namespace cylsolid {

std::string_view to_string(SweepParam param) noexcept
{
    switch (param) {
    case SweepParam::Alpha: return "alpha";
    case SweepParam::Distance: return "d";
    case SweepParam::NearCap: return "L1";
    }
    return "unknown";
}

std::optional<SweepParam> parse_sweep_param(std::string_view name) noexcept
{
    for (SweepParam p : {SweepParam::Alpha, SweepParam::Distance, SweepParam::NearCap}) {
        if (name == to_string(p))
            return p;
    }
    return std::nullopt;
}

std::vector<double> make_grid(double from, double to, std::size_t steps, bool log)
{
    if (steps < 2)
        throw Error(ErrorCode::InvalidArgument, "a sweep needs at least 2 steps");
    if (!std::isfinite(from) || !std::isfinite(to))
        throw Error(ErrorCode::InvalidArgument, "sweep bounds must be finite");
    if (log && !(from > 0 && to > 0))
        throw Error(ErrorCode::InvalidArgument, "logarithmic sweeps need positive bounds");

    std::vector<double> grid(steps);
    const double last = static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / last;
        if (log) {
            grid[i] = from * std::pow(to / from, t);
            continue;
        }
        // Fill each half from its own end so a -x..x grid is exactly symmetric.
        const double back = static_cast<double>(steps - 1 - i) / last;
        grid[i] = 2 * i < steps ? from + (to - from) * t : to - (to - from) * back;
    }
    grid.front() = from;
    grid.back() = to;
    return grid;
}

CylinderScene apply(const CylinderScene& base, SweepParam param, double value)
{
    CylinderScene s = base;
    switch (param) {
    case SweepParam::Alpha:
        s.alpha = value;
        break;
    case SweepParam::Distance:
        s.d = value;
        break;
    case SweepParam::NearCap: {
        const double length = base.z2 - base.z1;
        s.z1 = value;
        s.z2 = value + length;
        break;
    }
    }
    return s;
}

std::vector<SweepRow> sweep(const CylinderScene& base, SweepParam param,
                            std::span<const double> grid, const SweepOptions& options)
{
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double value : grid) {
        SweepRow row;
        row.param = param;
        row.param_value = value;
        try {
            const CanonicalCase c = classify(apply(base, param, value));
            row.case_id = c.id;
            const SolidAngle sa = omega(c);
            row.omega = sa.value;
            if (sa.breakdown) {
                row.omega_cyl = sa.breakdown->cylinder;
                row.omega_circ = sa.breakdown->circle;
            }
            if (options.oracle_abs_tol)
                row.oracle = quad_omega(c, *options.oracle_abs_tol).value;
        } catch (const Error& e) {
            row.error = e.code();
            row.message = e.message();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace cylsolid
