#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "m3s/bits.hpp"

namespace m3s {

struct Literal {
    std::uint32_t var = 0;
    bool neg = false;

    bool value_in(const Bits& x) const { return x.get(var) != neg; }

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
    std::array<Literal, 3> lits;

    friend bool operator==(const Clause&, const Clause&) = default;
};

// Per-assignment clause counts keyed by how many literals satisfy each
// clause. c1+c2+c3 is the fitness, c0+c1+c2+c3 the clause count.
struct SatProfile {
    std::int64_t c0 = 0;
    std::int64_t c1 = 0;
    std::int64_t c2 = 0;
    std::int64_t c3 = 0;

    std::int64_t total() const { return c0 + c1 + c2 + c3; }
    std::int64_t satisfied() const { return c1 + c2 + c3; }

    friend bool operator==(const SatProfile&, const SatProfile&) = default;
};

// Immutable Max3Sat instance: n variables, an ordered clause list, and the
// inverse clause-membership index (clause ids per variable).
class Max3SatInstance {
public:
    Max3SatInstance(std::size_t n, std::vector<Clause> clauses)
        : n_(n), clauses_(std::move(clauses)), membership_(n) {
        for (std::size_t c = 0; c < clauses_.size(); ++c) {
            const auto& lits = clauses_[c].lits;
            for (int i = 0; i < 3; ++i) {
                if (lits[i].var >= n_)
                    throw std::invalid_argument(
                        "clause " + std::to_string(c + 1) + ": variable index out of range");
                for (int j = i + 1; j < 3; ++j)
                    if (lits[i].var == lits[j].var)
                        throw std::invalid_argument(
                            "clause " + std::to_string(c + 1) + ": repeated variable in clause");
            }
            for (const auto& lit : lits)
                membership_[lit.var].push_back(static_cast<std::uint32_t>(c));
        }
    }

    std::size_t num_vars() const { return n_; }
    std::size_t num_clauses() const { return clauses_.size(); }
    const std::vector<Clause>& clauses() const { return clauses_; }
    const Clause& clause(std::size_t c) const { return clauses_[c]; }

    // Clause indices containing v, in clause order.
    const std::vector<std::uint32_t>& clauses_of(std::uint32_t v) const {
        return membership_[v];
    }

    friend bool operator==(const Max3SatInstance& a, const Max3SatInstance& b) {
        return a.n_ == b.n_ && a.clauses_ == b.clauses_;
    }

private:
    std::size_t n_;
    std::vector<Clause> clauses_;
    std::vector<std::vector<std::uint32_t>> membership_;
};

// Number of literals of `clause` made true by x, in [0,3].
inline int clause_sat_count(const Clause& clause, const Bits& x) {
    int k = 0;
    for (const auto& lit : clause.lits) k += lit.value_in(x);
    return k;
}

// Full scan over all clauses. This is the reference evaluation; all
// incremental bookkeeping must agree with it.
inline SatProfile evaluate(const Max3SatInstance& inst, const Bits& x) {
    if (x.size() != inst.num_vars())
        throw std::invalid_argument("evaluate: assignment length does not match instance");
    SatProfile p;
    for (const auto& cl : inst.clauses()) {
        switch (clause_sat_count(cl, x)) {
            case 0: ++p.c0; break;
            case 1: ++p.c1; break;
            case 2: ++p.c2; break;
            default: ++p.c3; break;
        }
    }
    return p;
}

inline std::int64_t fitness(const Max3SatInstance& inst, const Bits& x) {
    return evaluate(inst, x).satisfied();
}

} // namespace m3s
