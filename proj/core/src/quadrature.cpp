#include "cylsolid/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "cylsolid/error.hpp"

namespace cylsolid {

namespace {

// Kronrod abscissae on [0, 1); odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = half * kNodes[i];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1)
            gauss += kGaussWeights[i / 2] * pair;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, std::span<const double> points,
                           const QuadratureOptions& options)
{
    if (points.size() < 2 || options.initial_panels == 0 || !(options.abs_tol > 0))
        throw Error(ErrorCode::InvalidArgument, "quadrature needs two points and a positive tolerance");

    std::priority_queue<Panel> heap;
    for (std::size_t s = 0; s + 1 < points.size(); ++s) {
        const double lo = points[s];
        const double hi = points[s + 1];
        if (!(lo < hi))
            continue;
        const double width = (hi - lo) / static_cast<double>(options.initial_panels);
        for (std::size_t i = 0; i < options.initial_panels; ++i) {
            const double a = lo + width * static_cast<double>(i);
            const double b = i + 1 == options.initial_panels ? hi : a + width;
            heap.push(gauss_kronrod(f, a, b));
        }
    }

    auto summed_error = [&] {
        auto copy = heap;
        double sum = 0;
        while (!copy.empty()) {
            sum += copy.top().error;
            copy.pop();
        }
        return sum;
    };
    double total_error = summed_error();

    while (total_error > options.abs_tol) {
        if (heap.size() + 1 > options.max_panels) {
            // Incremental bookkeeping drifts; confirm before giving up.
            total_error = summed_error();
            if (total_error <= options.abs_tol)
                break;
            std::ostringstream os;
            os << "no convergence to " << options.abs_tol << " within " << options.max_panels
               << " panels (estimate " << total_error << ")";
            throw Error(ErrorCode::NonConvergence, os.str());
        }
        const Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            throw Error(ErrorCode::NonConvergence, "panel width reached machine resolution");
        }
        heap.pop();
        const Panel left = gauss_kronrod(f, worst.a, mid);
        const Panel right = gauss_kronrod(f, mid, worst.b);
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        if (total_error <= options.abs_tol)
            total_error = summed_error();
    }

    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    // Sum left to right so the result does not depend on heap internals.
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    QuadratureResult result;
    for (const Panel& p : panels) {
        result.value += p.value;
        result.error += p.error;
    }
    result.panels = panels.size();
    return result;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options)
{
    if (a == b)
        return {};
    if (b < a) {
        QuadratureResult result = integrate(f, b, a, options);
        result.value = -result.value;
        return result;
    }
    const std::array<double, 2> points = {a, b};
    return integrate(f, std::span<const double>(points), options);
}

} // namespace cylsolid
