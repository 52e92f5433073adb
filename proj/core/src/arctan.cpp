#include "cylsolid/arctan.hpp"

#include <cmath>

namespace cylsolid {

double arctan_sum(double x, double y, Sign sign) noexcept
{
    const double num = sign == Sign::Plus ? x + y : x - y;
    const double c = sign == Sign::Plus ? 1 - x * y : 1 + x * y;
    const double hyp = std::hypot(num, c);
    if (num == 0)
        return 0.0;
    // c + hyp cancels when c < 0; use c + hyp = num^2 / (hyp - c) there.
    const double ratio = c >= 0 ? num / (c + hyp) : (hyp - c) / num;
    return 2 * std::atan(ratio);
}

} // namespace cylsolid
