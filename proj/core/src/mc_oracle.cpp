#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "cylsolid/error.hpp"
#include "cylsolid/oracle.hpp"

namespace cylsolid {

std::string_view to_string(OracleMethod method) noexcept
{
    return method == OracleMethod::Quadrature ? "quad" : "mc";
}

OracleEstimate mc_hit_fraction(const CylinderScene& scene, const McOptions& options,
                               DirectionSampler sampler)
{
    validate(scene);
    if (options.n == 0 || options.partitions == 0)
        throw Error(ErrorCode::InvalidArgument, "Monte Carlo needs samples and partitions");

    const std::size_t parts = options.partitions;
    std::vector<std::uint64_t> hits(parts, 0);
    auto run_partition = [&](std::size_t index) {
        const std::uint64_t count =
            options.n / parts + (index < options.n % parts ? 1 : 0);
        Rng rng(derive_stream_seed(options.seed, index));
        std::uint64_t local = 0;
        for (std::uint64_t i = 0; i < count; ++i)
            local += ray_hits_cylinder(scene, sampler(rng)) ? 1 : 0;
        hits[index] = local;
    };

    std::size_t threads = options.threads;
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, parts);
    if (threads <= 1) {
        for (std::size_t i = 0; i < parts; ++i)
            run_partition(i);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (std::size_t w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < parts; i += threads)
                    run_partition(i);
            });
        }
    }

    OracleEstimate est;
    est.method = OracleMethod::MonteCarlo;
    for (std::uint64_t h : hits)
        est.hits += h;
    est.n_samples = options.n;
    est.seed = options.seed;
    est.partitions = parts;
    est.rng = kRngName;
    const double n = static_cast<double>(options.n);
    est.value = static_cast<double>(est.hits) / n;
    est.uncertainty = std::sqrt(est.value * (1 - est.value) / n);
    return est;
}

OracleEstimate mc_omega(const CylinderScene& scene, const McOptions& options)
{
    if (options.n < kMinMonteCarloSamples)
        throw Error(ErrorCode::InvalidArgument, "Monte Carlo solid angle needs n >= 10^4 samples");
    return mc_hit_fraction(scene, options, &sample_cosine_direction);
}

OracleEstimate mc_omega(const CanonicalCase& c, const McOptions& options)
{
    return mc_omega(to_scene(c), options);
}

} // namespace cylsolid
