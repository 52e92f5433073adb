#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "cylsolid/geometry.hpp"
#include "cylsolid/ray_tracer.hpp"

namespace cylsolid {

enum class OracleMethod { Quadrature, MonteCarlo };

std::string_view to_string(OracleMethod method) noexcept;

/// Independent estimate of a solid angle.
///
/// Quadrature: `uncertainty` is the requested absolute tolerance and
/// `error_estimate` the achieved Gauss-Kronrod estimate (<= uncertainty).
/// Monte Carlo: `uncertainty` is the binomial standard error
/// sqrt(p(1 - p)/n) of the hit fraction p.
struct OracleEstimate {
    OracleMethod method = OracleMethod::Quadrature;
    double value = 0;
    double uncertainty = 0;
    double error_estimate = 0;
    std::size_t panels = 0;
    std::uint64_t n_samples = 0;
    std::uint64_t hits = 0;
    std::uint64_t seed = 0;
    std::size_t partitions = 0;
    std::string_view rng;
};

inline constexpr double kMinQuadratureTolerance = 1e-12;
inline constexpr std::uint64_t kMinMonteCarloSamples = 10'000;

/// Solid angle by quadrature: the polar integral is done in closed form per
/// azimuth and the remaining azimuthal integral adaptively, over the
/// integration limits from geometry. Throws Error(NonConvergence) when the
/// panel budget is exhausted.
OracleEstimate quad_omega(const CanonicalCase& c, double abs_tol, std::size_t initial_panels = 8);

/// Direct quadrature of the F integrals over their azimuth limits, without
/// any of the closed forms. Same argument domains as f1, f2 and f3.
OracleEstimate quad_f1(double L, double d, double r, double alpha, double abs_tol);
OracleEstimate quad_f2(double L, double d, double r, double alpha, double abs_tol);
OracleEstimate quad_f3(double L, double d, double r, double alpha, double abs_tol);

struct McOptions {
    std::uint64_t n = 1'000'000;
    std::uint64_t seed = 0x00c0ffee5eedull;
    /// Independent sample streams; the estimate depends on this, not on threads.
    std::size_t partitions = 16;
    /// Worker threads; 0 picks hardware concurrency.
    std::size_t threads = 0;
};

using DirectionSampler = Vec3 (*)(Rng&);

/// Fraction of `options.n` sampled directions that hit the scene's cylinder.
/// Deterministic for fixed (scene, n, seed, partitions).
OracleEstimate mc_hit_fraction(const CylinderScene& scene, const McOptions& options,
                               DirectionSampler sampler);

/// Monte Carlo solid angle with cosine-law sampling about the source axis.
/// Requires n >= kMinMonteCarloSamples.
OracleEstimate mc_omega(const CylinderScene& scene, const McOptions& options = {});
OracleEstimate mc_omega(const CanonicalCase& c, const McOptions& options = {});

} // namespace cylsolid
