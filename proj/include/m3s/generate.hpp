#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "m3s/instance.hpp"
#include "m3s/rng.hpp"

namespace m3s {

enum class GeneratorKind { uniform, scale_free };

struct GeneratorConfig {
    GeneratorKind kind = GeneratorKind::uniform;
    std::uint32_t n = 0;
    double cr = 0.0;       // clauses per variable
    double beta = 0.0;     // power-law parameter, scale-free only
    std::uint64_t seed = 0;

    std::size_t num_clauses() const {
        return static_cast<std::size_t>(std::floor(static_cast<double>(n) * cr));
    }
};

namespace detail {

inline void check_generator_config(const GeneratorConfig& cfg) {
    if (cfg.n < 3) throw std::invalid_argument("generator: need at least 3 variables");
    if (cfg.num_clauses() < 1) throw std::invalid_argument("generator: clause ratio yields no clauses");
}

// Draw three distinct variables with `draw`, then one polarity coin per slot.
template <class Draw>
Clause draw_clause(Draw&& draw, Rng& rng) {
    std::uint32_t v[3];
    v[0] = draw();
    do v[1] = draw(); while (v[1] == v[0]);
    do v[2] = draw(); while (v[2] == v[0] || v[2] == v[1]);
    Clause cl;
    for (int i = 0; i < 3; ++i) cl.lits[i] = {v[i], rng.coin()};
    return cl;
}

} // namespace detail

// floor(n*cr) clauses of three distinct uniformly drawn variables, each
// literal negated with probability 1/2. Deterministic given the seed.
inline Max3SatInstance generate_uniform(const GeneratorConfig& cfg) {
    detail::check_generator_config(cfg);
    Rng rng(cfg.seed);
    const std::size_t m = cfg.num_clauses();
    std::vector<Clause> clauses;
    clauses.reserve(m);
    auto draw = [&] { return static_cast<std::uint32_t>(rng.below(cfg.n)); };
    for (std::size_t c = 0; c < m; ++c)
        clauses.push_back(detail::draw_clause(draw, rng));
    return Max3SatInstance(cfg.n, std::move(clauses));
}

// Scale-free sampling: variable of rank i (1-based) is drawn with
// probability proportional to i^(-1/beta), resampled within a clause until
// the three variables are distinct. Polarity is uniform.
inline Max3SatInstance generate_scale_free(const GeneratorConfig& cfg) {
    detail::check_generator_config(cfg);
    if (!(cfg.beta > 1.0)) throw std::invalid_argument("generator: beta must be > 1");
    Rng rng(cfg.seed);
    const std::size_t m = cfg.num_clauses();

    std::vector<double> cdf(cfg.n);
    double acc = 0.0;
    for (std::uint32_t i = 0; i < cfg.n; ++i) {
        acc += std::pow(static_cast<double>(i + 1), -1.0 / cfg.beta);
        cdf[i] = acc;
    }

    auto draw = [&] {
        const double u = rng.unit() * acc;
        std::uint32_t lo = 0, hi = cfg.n - 1;
        while (lo < hi) {
            const std::uint32_t mid = lo + (hi - lo) / 2;
            if (cdf[mid] <= u)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    };

    std::vector<Clause> clauses;
    clauses.reserve(m);
    for (std::size_t c = 0; c < m; ++c)
        clauses.push_back(detail::draw_clause(draw, rng));
    return Max3SatInstance(cfg.n, std::move(clauses));
}

inline Max3SatInstance generate(const GeneratorConfig& cfg) {
    return cfg.kind == GeneratorKind::uniform ? generate_uniform(cfg)
                                              : generate_scale_free(cfg);
}

} // namespace m3s
