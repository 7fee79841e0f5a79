#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "m3s/instance.hpp"
#include "m3s/vig.hpp"

namespace m3s {

// Decomposition of two parents for partition crossover: the differing
// variables split into VIG-connected components, with each parent's
// satisfied-clause count over the clauses attached to each component.
// A clause's three variables are mutually adjacent in the VIG, so all of a
// clause's differing variables land in the same component; clauses with no
// differing variable are identical under both parents and attach nowhere.
struct PxDecomposition {
    std::vector<std::vector<std::uint32_t>> components;
    std::vector<std::int64_t> parent_a_fitness; // per component
    std::vector<std::int64_t> parent_b_fitness;
};

// Empty iff a == b (no differing variables, nothing to exchange).
inline std::optional<PxDecomposition> px_decompose(const Max3SatInstance& inst,
                                                   const Vig& vig,
                                                   const Bits& a, const Bits& b) {
    std::vector<std::uint32_t> diff;
    for (std::uint32_t v = 0; v < inst.num_vars(); ++v)
        if (a.get(v) != b.get(v)) diff.push_back(v);
    if (diff.empty()) return std::nullopt;

    PxDecomposition d;
    d.components = connected_components_restricted(vig, diff);

    std::vector<std::int32_t> comp_of(inst.num_vars(), -1);
    for (std::size_t c = 0; c < d.components.size(); ++c)
        for (auto v : d.components[c]) comp_of[v] = static_cast<std::int32_t>(c);

    d.parent_a_fitness.assign(d.components.size(), 0);
    d.parent_b_fitness.assign(d.components.size(), 0);
    for (const auto& cl : inst.clauses()) {
        std::int32_t comp = -1;
        for (const auto& lit : cl.lits)
            if (comp_of[lit.var] >= 0) { comp = comp_of[lit.var]; break; }
        if (comp < 0) continue; // clause entirely in the shared part
        d.parent_a_fitness[comp] += clause_sat_count(cl, a) > 0;
        d.parent_b_fitness[comp] += clause_sat_count(cl, b) > 0;
    }
    return d;
}

// Swap the masked genes between the parents: a' takes the mask from b and
// b' takes it from a.
inline std::pair<Bits, Bits> px_exchange(const Bits& a, const Bits& b,
                                         std::span<const std::uint32_t> mask) {
    Bits a2 = a, b2 = b;
    for (auto v : mask) {
        a2.set(v, b.get(v));
        b2.set(v, a.get(v));
    }
    return {std::move(a2), std::move(b2)};
}

// Offspring fitness when each component is taken from the better parent:
// f(a) plus every strictly positive per-component gain of b over a.
inline std::int64_t px_best_offspring_gain(const PxDecomposition& d) {
    std::int64_t gain = 0;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        const std::int64_t g = d.parent_b_fitness[c] - d.parent_a_fitness[c];
        if (g > 0) gain += g;
    }
    return gain;
}

// Greedy per-component offspring: each component comes from the parent with
// the higher partial fitness (ties favor a), shared genes copied from a.
// Component independence makes this the best of all 2^q mask combinations.
inline Bits px_best_offspring(const Bits& a, const Bits& b, const PxDecomposition& d) {
    Bits child = a;
    for (std::size_t c = 0; c < d.components.size(); ++c)
        if (d.parent_b_fitness[c] > d.parent_a_fitness[c])
            for (auto v : d.components[c]) child.set(v, b.get(v));
    return child;
}

inline std::optional<Bits> px_best_offspring(const Max3SatInstance& inst, const Vig& vig,
                                             const Bits& a, const Bits& b) {
    const auto d = px_decompose(inst, vig, a, b);
    if (!d) return std::nullopt;
    return px_best_offspring(a, b, *d);
}

} // namespace m3s
