#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace cylsolid {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    /// Panels per breakpoint segment before adaptive refinement starts.
    std::size_t initial_panels = 8;
    /// Subdivision budget; exceeding it raises Error(NonConvergence).
    std::size_t max_panels = std::size_t{1} << 16;
};

struct QuadratureResult {
    double value = 0;
    double error = 0; ///< summed |K15 - G7| over the final panels
    std::size_t panels = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod integration. The panel with the
/// largest error estimate is bisected until the summed estimate falls to
/// abs_tol. `points` are the ordered segment boundaries (at least two).
QuadratureResult integrate(const std::function<double(double)>& f, std::span<const double> points,
                           const QuadratureOptions& options = {});

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

} // namespace cylsolid
