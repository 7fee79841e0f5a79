#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "m3s/instance.hpp"
#include "m3s/mmst.hpp"
#include "m3s/operators.hpp"
#include "m3s/px.hpp"
#include "m3s/rng.hpp"
#include "m3s/vig.hpp"

namespace m3s {

// Leveled population of solutions. Insertion is rejected when an identical
// assignment already lives anywhere in the pyramid; levels are appended one
// at a time. Members may be improved in place, which keeps the membership
// set keyed on current values (one canonical owner per assignment).
class Pyramid {
public:
    std::size_t num_levels() const { return levels_.size(); }
    std::size_t level_size(std::size_t level) const { return levels_[level].size(); }
    const std::vector<Bits>& level(std::size_t level) const { return levels_[level]; }
    const Bits& member(std::size_t level, std::size_t idx) const { return levels_[level][idx]; }

    std::size_t size() const {
        std::size_t s = 0;
        for (const auto& l : levels_) s += l.size();
        return s;
    }

    bool contains(const Bits& x) const { return membership_.contains(x); }

    // Appends a level when level == num_levels(); larger gaps are a bug in
    // the caller.
    bool add_unique(std::size_t level, const Bits& x) {
        if (level > levels_.size())
            throw std::logic_error("Pyramid::add_unique: level gap");
        if (membership_.contains(x)) return false;
        if (level == levels_.size()) levels_.emplace_back();
        levels_[level].push_back(x);
        membership_.insert(x);
        return true;
    }

    void replace(std::size_t level, std::size_t idx, const Bits& x) {
        Bits& slot = levels_[level][idx];
        if (slot == x) return;
        membership_.erase(slot);
        membership_.insert(x);
        slot = x;
    }

private:
    std::vector<std::vector<Bits>> levels_;
    std::unordered_set<Bits, BitsHash> membership_;
};

enum class Algorithm { ipp, mocsm, mocsm_mixed };

inline const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::ipp: return "ipp";
        case Algorithm::mocsm: return "mocsm";
        default: return "mocsm-mixed";
    }
}

inline std::optional<Algorithm> algorithm_from_name(std::string_view s) {
    if (s == "ipp") return Algorithm::ipp;
    if (s == "mocsm") return Algorithm::mocsm;
    if (s == "mocsm-mixed") return Algorithm::mocsm_mixed;
    return std::nullopt;
}

struct RunConfig {
    Algorithm algorithm = Algorithm::mocsm;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> flip_limit;
    std::optional<std::uint64_t> time_limit_ms;
    std::optional<std::int64_t> target;
    std::size_t long_connection_steps = 25;

    void validate() const {
        if (!flip_limit && !time_limit_ms && !target)
            throw std::invalid_argument("RunConfig: no stop criterion set");
    }
};

struct HistoryEntry {
    std::int64_t fitness;
    std::uint64_t flip_updates;

    friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

struct RunResult {
    Bits best;
    std::int64_t best_fitness = 0;
    std::uint64_t full_evaluations = 0;
    std::uint64_t flip_updates = 0;
    std::uint64_t wall_ms = 0;
    bool success = false;
    std::vector<HistoryEntry> history; // strictly improving, last == best
};

// Which members get the directed treatment and which get the f_cf drift.
// Positions are level-major (level 0 first, insertion order within a
// level); a fresh climber counts as the level-0 slot it is about to take.
enum class IlsSelect { undirected_all, directed_all, directed_odd_positions };
enum class LcSelect { none, all, even_positions };

struct DriverSpec {
    IlsSelect ils = IlsSelect::directed_all;
    LcSelect lc = LcSelect::all;
};

inline DriverSpec driver_spec_for(Algorithm a) {
    switch (a) {
        case Algorithm::ipp: return {IlsSelect::undirected_all, LcSelect::none};
        case Algorithm::mocsm: return {IlsSelect::directed_all, LcSelect::all};
        default: return {IlsSelect::directed_odd_positions, LcSelect::even_positions};
    }
}

inline bool member_gets_directed_ils(IlsSelect sel, std::size_t pos) {
    switch (sel) {
        case IlsSelect::undirected_all: return false;
        case IlsSelect::directed_all: return true;
        default: return pos % 2 == 1;
    }
}

inline bool member_gets_long_connection(LcSelect sel, std::size_t pos) {
    switch (sel) {
        case LcSelect::none: return false;
        case LcSelect::all: return true;
        default: return pos % 2 == 0;
    }
}

// Shared pyramid driver. One iteration: improve every member with its ILS
// step, create and improve a fresh climber, insert it at level 0, run the
// crossover ascent (strictly improving offspring are placed one level above
// their partner and adopted as the climber), then apply the f_cf drift to
// the selected members. Stop criteria are checked between operations, so a
// flip-limit run is bit-reproducible for a given seed.
inline RunResult run_driver(const Max3SatInstance& inst, const RunConfig& cfg, DriverSpec spec) {
    cfg.validate();
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    auto elapsed_ms = [&t0] {
        return static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count());
    };

    Rng rng(cfg.seed);
    EvalCounters ctr;
    const std::size_t n = inst.num_vars();

    RunResult res;
    res.best = random_bits(n, rng);
    res.best_fitness = evaluate(inst, res.best).satisfied();
    ++ctr.full_evaluations;
    res.history.push_back({res.best_fitness, 0});

    auto note = [&](const Bits& x, std::int64_t f) {
        if (f > res.best_fitness) {
            res.best = x;
            res.best_fitness = f;
            res.history.push_back({f, ctr.flip_updates});
        }
    };
    auto stop = [&] {
        if (cfg.target && res.best_fitness >= *cfg.target) return true;
        if (cfg.flip_limit && ctr.flip_updates >= *cfg.flip_limit) return true;
        if (cfg.time_limit_ms && elapsed_ms() >= *cfg.time_limit_ms) return true;
        return false;
    };
    auto member_directed = [&spec](std::size_t pos) {
        return member_gets_directed_ils(spec.ils, pos);
    };
    auto lc_applies = [&spec](std::size_t pos) {
        return member_gets_long_connection(spec.lc, pos);
    };

    const Vig vig = Vig::build(inst);
    Pyramid pyr;
    bool halt = stop();

    while (!halt) {
        // Improve every pyramid member.
        std::size_t pos = 0;
        for (std::size_t level = 0; level < pyr.num_levels() && !halt; ++level) {
            for (std::size_t idx = 0; idx < pyr.level_size(level); ++idx, ++pos) {
                if ((halt = stop())) break;
                Mmst m(inst, pyr.member(level, idx), &ctr);
                if (member_directed(pos))
                    directed_ils_step(m, rng);
                else
                    ils_step(m, rng);
                pyr.replace(level, idx, m.assignment());
                note(m.assignment(), m.fitness());
            }
        }
        if (halt || (halt = stop())) break;

        // Fresh climber, improved once and inserted at the bottom.
        const std::size_t climber_pos = pyr.num_levels() ? pyr.level_size(0) : 0;
        Mmst cm(inst, random_bits(n, rng), &ctr);
        if (member_directed(climber_pos))
            directed_ils_step(cm, rng);
        else
            ils_step(cm, rng);
        Bits climber = cm.assignment();
        std::int64_t climber_fitness = cm.fitness();
        note(climber, climber_fitness);
        pyr.add_unique(0, climber);

        // Crossover ascent.
        for (std::size_t level = 0; level < pyr.num_levels() && !halt; ++level) {
            for (std::size_t idx = 0; idx < pyr.level_size(level); ++idx) {
                if ((halt = stop())) break;
                const Bits partner = pyr.member(level, idx);
                const auto d = px_decompose(inst, vig, climber, partner);
                if (!d) continue; // identical pair, nothing to mix
                ++ctr.full_evaluations;
                const std::int64_t off_fitness = climber_fitness + px_best_offspring_gain(*d);
                if (off_fitness > climber_fitness) {
                    Bits off = px_best_offspring(climber, partner, *d);
                    pyr.add_unique(level + 1, off);
                    climber = std::move(off);
                    climber_fitness = off_fitness;
                    note(climber, climber_fitness);
                }
            }
        }
        if (halt) break;

        // f_cf drift over the selected members.
        if (spec.lc != LcSelect::none && cfg.long_connection_steps > 0) {
            pos = 0;
            for (std::size_t level = 0; level < pyr.num_levels() && !halt; ++level) {
                for (std::size_t idx = 0; idx < pyr.level_size(level); ++idx, ++pos) {
                    if (!lc_applies(pos)) continue;
                    if ((halt = stop())) break;
                    Mmst m(inst, pyr.member(level, idx), &ctr);
                    long_connection(m, cfg.long_connection_steps, rng);
                    pyr.replace(level, idx, m.assignment());
                    note(m.assignment(), m.fitness());
                }
            }
        }
        halt = halt || stop();
    }

    res.full_evaluations = ctr.full_evaluations;
    res.flip_updates = ctr.flip_updates;
    res.wall_ms = elapsed_ms();
    res.success = cfg.target && res.best_fitness >= *cfg.target;
    return res;
}

inline RunResult run(const Max3SatInstance& inst, const RunConfig& cfg) {
    return run_driver(inst, cfg, driver_spec_for(cfg.algorithm));
}

inline RunResult ipp_run(const Max3SatInstance& inst, RunConfig cfg) {
    cfg.algorithm = Algorithm::ipp;
    return run(inst, cfg);
}

inline RunResult mocsm_run(const Max3SatInstance& inst, RunConfig cfg) {
    cfg.algorithm = Algorithm::mocsm;
    return run(inst, cfg);
}

inline RunResult mocsm_mixed_run(const Max3SatInstance& inst, RunConfig cfg) {
    cfg.algorithm = Algorithm::mocsm_mixed;
    return run(inst, cfg);
}

} // namespace m3s
