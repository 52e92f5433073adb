#pragma once

namespace cylsolid {

enum class Sign { Plus, Minus };

/// arctan(x) +/- arctan(y) folded into a single arctangent,
///
///   2 arctan[(x +/- y) / (1 -/+ xy + sqrt((x +/- y)^2 + (1 -/+ xy)^2))],
///
/// which equals the two-call sum for every real x, y with no wrap by pi.
double arctan_sum(double x, double y, Sign sign) noexcept;

} // namespace cylsolid
