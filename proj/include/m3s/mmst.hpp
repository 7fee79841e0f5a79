#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "m3s/instance.hpp"

namespace m3s {

// Work accounting shared by everything that evaluates or flips. A full
// evaluation is one O(m) scan (table build, reference evaluate, crossover
// fitness bookkeeping); a flip update is one incremental single-variable
// table update. The two are reported side by side and never blended.
struct EvalCounters {
    std::uint64_t full_evaluations = 0;
    std::uint64_t flip_updates = 0;
};

// Per-variable multi-satisfiability counters. For variable v:
//   ck = clauses containing v currently satisfied k times (k in 0..3)
//   sk = those of the ck where v's own literal is among the satisfiers
//   uk = those where it is not (u3 would always be 0 and is not stored)
// Identities: ck = sk + uk, and c0+c1+c2+c3 = number of clauses containing v.
struct VarCounters {
    std::int32_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    std::int32_t s1 = 0, s2 = 0, s3 = 0;
    std::int32_t u1 = 0, u2 = 0;

    friend bool operator==(const VarCounters&, const VarCounters&) = default;
};

// Eq-style clause-satisfiability score of `after` relative to `before`:
// the change in once-satisfied clauses minus the change in twice-satisfied
// clauses.
inline std::int64_t f_cf(const SatProfile& before, const SatProfile& after) {
    return (after.c1 - before.c1) - (after.c2 - before.c2);
}

// Max3Sat multi-satisfiability table: per-clause satisfier counts plus the
// VarCounters above, kept consistent with the bound assignment across
// single-variable flips. A flip touches only the clauses containing the
// flipped variable, so it costs O(3 * degree) counter adjustments; fitness
// and f_cf deltas for any single flip read off the counters in O(1).
class Mmst {
public:
    Mmst(const Max3SatInstance& inst, Bits x, EvalCounters* counters = nullptr)
        : inst_(&inst), external_(counters) {
        reset(std::move(x));
    }

    // Rebuild every counter from scratch for a new assignment. Counts as
    // one full evaluation.
    void reset(Bits x) {
        if (x.size() != inst_->num_vars())
            throw std::invalid_argument("Mmst: assignment length does not match instance");
        x_ = std::move(x);
        clause_sat_.assign(inst_->num_clauses(), 0);
        vars_.assign(inst_->num_vars(), VarCounters{});
        profile_ = SatProfile{};

        for (std::size_t c = 0; c < inst_->num_clauses(); ++c) {
            const auto& lits = inst_->clause(c).lits;
            bool truth[3];
            int k = 0;
            for (int i = 0; i < 3; ++i) {
                truth[i] = lits[i].value_in(x_);
                k += truth[i];
            }
            clause_sat_[c] = static_cast<std::uint8_t>(k);
            bump_profile(k, +1);
            for (int i = 0; i < 3; ++i)
                adjust(vars_[lits[i].var], k, truth[i], +1);
        }
        ++ctr().full_evaluations;
    }

    const Max3SatInstance& instance() const { return *inst_; }
    const Bits& assignment() const { return x_; }
    const SatProfile& profile() const { return profile_; }
    std::int64_t fitness() const { return profile_.satisfied(); }
    int sat_count(std::size_t clause) const { return clause_sat_[clause]; }
    const VarCounters& var_counters(std::uint32_t v) const { return vars_.at(v); }

    // Fitness change from flipping v, without flipping: clauses that would
    // become satisfied minus clauses only v's literal keeps satisfied.
    std::int64_t fitness_delta(std::uint32_t v) const {
        const auto& vc = vars_.at(v);
        return std::int64_t{vc.c0} - vc.s1;
    }

    // f_cf of (x with v flipped) relative to x, from the counters alone.
    std::int64_t fcf_delta(std::uint32_t v) const {
        const auto& vc = vars_.at(v);
        const std::int64_t dc1 = (std::int64_t{vc.c0} + vc.s2) - (std::int64_t{vc.s1} + vc.u1);
        const std::int64_t dc2 = (std::int64_t{vc.u1} + vc.s3) - (std::int64_t{vc.s2} + vc.u2);
        return dc1 - dc2;
    }

    // Toggle bit v and update the counters of every variable sharing a
    // clause with v. For v itself this swaps (c0,s1), (s2,u1), (s3,u2).
    void flip(std::uint32_t v) {
        if (v >= inst_->num_vars()) throw std::out_of_range("Mmst::flip: variable out of range");
        for (auto c : inst_->clauses_of(v)) {
            const auto& lits = inst_->clause(c).lits;
            bool truth[3];
            int slot = -1;
            for (int i = 0; i < 3; ++i) {
                truth[i] = lits[i].value_in(x_);
                if (lits[i].var == v) slot = i;
            }
            const int old_k = clause_sat_[c];
            const int new_k = old_k + (truth[slot] ? -1 : +1);

            for (int i = 0; i < 3; ++i) {
                auto& vc = vars_[lits[i].var];
                const bool after = (i == slot) ? !truth[i] : truth[i];
                adjust(vc, old_k, truth[i], -1);
                adjust(vc, new_k, after, +1);
            }
            bump_profile(old_k, -1);
            bump_profile(new_k, +1);
            clause_sat_[c] = static_cast<std::uint8_t>(new_k);
        }
        x_.flip(v);
        ++ctr().flip_updates;
    }

    // Variables whose flip strictly improves fitness, ascending, paired
    // with their deltas.
    std::vector<std::pair<std::uint32_t, std::int64_t>> improving_flips() const {
        std::vector<std::pair<std::uint32_t, std::int64_t>> out;
        for (std::uint32_t v = 0; v < inst_->num_vars(); ++v) {
            const std::int64_t d = std::int64_t{vars_[v].c0} - vars_[v].s1;
            if (d > 0) out.emplace_back(v, d);
        }
        return out;
    }

    std::vector<std::uint32_t> unsatisfied_clauses() const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t c = 0; c < clause_sat_.size(); ++c)
            if (clause_sat_[c] == 0) out.push_back(c);
        return out;
    }

    std::uint64_t full_evaluations() const { return external_ ? external_->full_evaluations : local_.full_evaluations; }
    std::uint64_t flip_updates() const { return external_ ? external_->flip_updates : local_.flip_updates; }

private:
    EvalCounters& ctr() { return external_ ? *external_ : local_; }

    void bump_profile(int k, std::int64_t d) {
        switch (k) {
            case 0: profile_.c0 += d; break;
            case 1: profile_.c1 += d; break;
            case 2: profile_.c2 += d; break;
            default: profile_.c3 += d; break;
        }
    }

    // Add d to the bucket of one clause membership: satisfied k times, with
    // the member's own literal satisfying (own=true) or not.
    static void adjust(VarCounters& vc, int k, bool own, std::int32_t d) {
        switch (k) {
            case 0: vc.c0 += d; break;
            case 1: vc.c1 += d; (own ? vc.s1 : vc.u1) += d; break;
            case 2: vc.c2 += d; (own ? vc.s2 : vc.u2) += d; break;
            default: vc.c3 += d; vc.s3 += d; break;
        }
    }

    const Max3SatInstance* inst_;
    Bits x_;
    std::vector<std::uint8_t> clause_sat_;
    std::vector<VarCounters> vars_;
    SatProfile profile_;
    EvalCounters* external_ = nullptr;
    EvalCounters local_;
};

} // namespace m3s
