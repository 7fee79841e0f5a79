#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "m3s/instance.hpp"
#include "m3s/mmst.hpp"
#include "m3s/rng.hpp"
#include "m3s/vig.hpp"

namespace m3s {

// Set of variable indices to re-randomize, sorted ascending.
using PerturbationMask = std::vector<std::uint32_t>;

struct FlipRecord {
    std::uint32_t var;
    std::int64_t fitness_delta; // value before the flip was taken
    std::int64_t fcf_delta;
};
using FlipTrace = std::vector<FlipRecord>;

// First Improvement Hill Climber: sweep the variables in a fresh random
// permutation, flipping any strict improvement immediately; done when a
// full sweep makes no flip.
inline void fihc(Mmst& m, Rng& rng, FlipTrace* trace = nullptr) {
    const std::uint32_t n = static_cast<std::uint32_t>(m.instance().num_vars());
    bool flipped = true;
    while (flipped) {
        flipped = false;
        const auto perm = rng.permutation(n);
        for (auto v : perm) {
            const std::int64_t d = m.fitness_delta(v);
            if (d > 0) {
                if (trace) trace->push_back({v, d, m.fcf_delta(v)});
                m.flip(v);
                flipped = true;
            }
        }
    }
}

namespace detail {

// Index of one maximal element, ties broken uniformly; draws from rng only
// when there is more than one maximum.
inline std::size_t argmax_uniform(const std::vector<std::int64_t>& vals, Rng& rng) {
    std::int64_t best = vals[0];
    for (auto v : vals) best = std::max(best, v);
    std::size_t ties = 0;
    for (auto v : vals) ties += v == best;
    std::size_t pick = ties > 1 ? static_cast<std::size_t>(rng.below(ties)) : 0;
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (vals[i] == best && pick-- == 0) return i;
    return 0; // unreachable
}

} // namespace detail

// Hill climber that always takes the improving flip with the highest f_cf,
// steering the climb toward the high-C1/low-C2 region while it improves.
inline void directed_fihc(Mmst& m, Rng& rng, FlipTrace* trace = nullptr) {
    for (;;) {
        const auto impr = m.improving_flips();
        if (impr.empty()) return;
        std::vector<std::int64_t> scores(impr.size());
        for (std::size_t i = 0; i < impr.size(); ++i)
            scores[i] = m.fcf_delta(impr[i].first);
        const std::size_t pick = detail::argmax_uniform(scores, rng);
        const auto [v, delta] = impr[pick];
        if (trace) trace->push_back({v, delta, scores[pick]});
        m.flip(v);
    }
}

// Perturbation mask seeded by one clause: union the variables of every
// clause sharing an argument with the seed (seed included), then keep a
// uniformly random quarter of that union, rounded up.
inline PerturbationMask clause_mask(const Max3SatInstance& inst, std::uint32_t seed_clause,
                                    Rng& rng) {
    std::vector<char> var_in(inst.num_vars(), 0);
    std::vector<std::uint32_t> pool;
    for (const auto& lit : inst.clause(seed_clause).lits)
        for (auto c : inst.clauses_of(lit.var))
            for (const auto& l2 : inst.clause(c).lits)
                if (!var_in[l2.var]) {
                    var_in[l2.var] = 1;
                    pool.push_back(l2.var);
                }
    std::sort(pool.begin(), pool.end());

    const std::size_t keep = (pool.size() + 3) / 4; // ceil(25%)
    for (std::size_t i = 0; i < keep; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(keep);
    std::sort(pool.begin(), pool.end());
    return pool;
}

// VIG-based perturbation mask: a chosen variable plus all its neighbors,
// randomly thinned (never dropping the center) down to max_size.
inline PerturbationMask vigbp_mask(const Vig& vig, std::uint32_t center, std::size_t max_size,
                                   Rng& rng) {
    std::vector<std::uint32_t> others = vig.neighbors(center);
    while (others.size() + 1 > max_size) {
        const std::size_t j = static_cast<std::size_t>(rng.below(others.size()));
        others[j] = others.back();
        others.pop_back();
    }
    others.push_back(center);
    std::sort(others.begin(), others.end());
    return others;
}

inline PerturbationMask vigbp_mask(const Vig& vig, std::size_t max_size, Rng& rng) {
    const auto center = static_cast<std::uint32_t>(rng.below(vig.num_vars()));
    return vigbp_mask(vig, center, max_size, rng);
}

namespace detail {

inline void randomize_mask(Mmst& m, const PerturbationMask& mask, Rng& rng) {
    for (auto v : mask) {
        const bool value = rng.coin();
        if (value != m.assignment().get(v)) m.flip(v);
    }
}

// Restore a saved assignment by flipping back the differing bits.
inline void revert_to(Mmst& m, const Bits& saved) {
    for (std::uint32_t v = 0; v < saved.size(); ++v)
        if (m.assignment().get(v) != saved.get(v)) m.flip(v);
}

template <class Climb>
bool ils_step_impl(Mmst& m, std::uint32_t seed_clause, Rng& rng, Climb&& climb) {
    const Bits saved = m.assignment();
    const std::int64_t saved_fitness = m.fitness();
    const auto mask = clause_mask(m.instance(), seed_clause, rng);
    randomize_mask(m, mask, rng);
    climb(m, rng);
    if (m.fitness() < saved_fitness) {
        revert_to(m, saved);
        return false;
    }
    return true;
}

} // namespace detail

// One perturb-and-climb step: random seed clause, clause mask, mask
// re-randomized, FIHC; reverted only when the result is strictly worse.
// Returns whether the perturbed solution was kept.
inline bool ils_step(Mmst& m, Rng& rng) {
    const auto seed = static_cast<std::uint32_t>(rng.below(m.instance().num_clauses()));
    return detail::ils_step_impl(m, seed, rng, [](Mmst& mm, Rng& r) { fihc(mm, r); });
}

// As ils_step, but the seed clause is drawn among the currently unsatisfied
// clauses and the climb is directed. A fully satisfied solution is left
// untouched.
inline bool directed_ils_step(Mmst& m, Rng& rng) {
    const auto unsat = m.unsatisfied_clauses();
    if (unsat.empty()) return true;
    const auto seed = unsat[rng.below(unsat.size())];
    return detail::ils_step_impl(m, seed, rng, [](Mmst& mm, Rng& r) { directed_fihc(mm, r); });
}

// Greedy f_cf drift, ignoring fitness: up to steps_limit flips, each the
// f_cf-argmax over all single flips, stopping only when the maximum drops
// below zero (zero-valued moves are taken). Returns the flips performed.
inline std::size_t long_connection(Mmst& m, std::size_t steps_limit, Rng& rng,
                                   FlipTrace* trace = nullptr) {
    const std::uint32_t n = static_cast<std::uint32_t>(m.instance().num_vars());
    std::vector<std::int64_t> scores(n);
    std::size_t steps = 0;
    while (steps < steps_limit) {
        std::int64_t max_score = m.fcf_delta(0);
        for (std::uint32_t v = 0; v < n; ++v) {
            scores[v] = m.fcf_delta(v);
            max_score = std::max(max_score, scores[v]);
        }
        if (max_score < 0) break;
        const std::size_t pick = detail::argmax_uniform(scores, rng);
        if (trace) trace->push_back({static_cast<std::uint32_t>(pick),
                                     m.fitness_delta(static_cast<std::uint32_t>(pick)),
                                     scores[pick]});
        m.flip(static_cast<std::uint32_t>(pick));
        ++steps;
    }
    return steps;
}

} // namespace m3s
