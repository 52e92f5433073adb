#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cylsolid/error.hpp"
#include "cylsolid/geometry.hpp"

namespace cylsolid {

/// Scene parameter varied by a sweep. NearCap translates the cylinder
/// axially so its lower end plane sits at z1 = value, keeping the length.
enum class SweepParam { Alpha, Distance, NearCap };

std::string_view to_string(SweepParam param) noexcept;
std::optional<SweepParam> parse_sweep_param(std::string_view name) noexcept;

/// `steps` >= 2 points from `from` to `to` inclusive. Logarithmic spacing
/// needs both ends positive.
std::vector<double> make_grid(double from, double to, std::size_t steps, bool log);

CylinderScene apply(const CylinderScene& base, SweepParam param, double value);

struct SweepRow {
    SweepParam param = SweepParam::Alpha;
    double param_value = 0;
    std::optional<CaseId> case_id;
    std::optional<double> omega;
    std::optional<double> omega_cyl;
    std::optional<double> omega_circ;
    std::optional<double> oracle; ///< quadrature value, when requested
    std::optional<ErrorCode> error;
    std::string message;
};

struct SweepOptions {
    /// Adds a quadrature column computed at this tolerance.
    std::optional<double> oracle_abs_tol;
};

/// Evaluates the analytic solid angle at every grid value. A failing point
/// yields a row carrying the error; the sweep itself never throws for it.
std::vector<SweepRow> sweep(const CylinderScene& base, SweepParam param,
                            std::span<const double> grid, const SweepOptions& options = {});

} // namespace cylsolid
