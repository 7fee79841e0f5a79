#pragma once

#include <string>

#include <json.hpp>

#include "m3s/pyramid.hpp"

namespace m3s {

// Documented wire format for one run:
// {instance, algorithm, seed, n, m, best_fitness, target, success,
//  full_evaluations, flip_updates, wall_ms, history:[{fitness, flip_updates}]}
inline nlohmann::json run_result_to_json(const RunResult& res, const std::string& instance_name,
                                         Algorithm algorithm, std::uint64_t seed, std::size_t n,
                                         std::size_t m, std::optional<std::int64_t> target) {
    nlohmann::json j;
    j["instance"] = instance_name;
    j["algorithm"] = algorithm_name(algorithm);
    j["seed"] = seed;
    j["n"] = n;
    j["m"] = m;
    j["best_fitness"] = res.best_fitness;
    if (target)
        j["target"] = *target;
    else
        j["target"] = nullptr;
    j["success"] = res.success;
    j["full_evaluations"] = res.full_evaluations;
    j["flip_updates"] = res.flip_updates;
    j["wall_ms"] = res.wall_ms;
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& h : res.history)
        hist.push_back({{"fitness", h.fitness}, {"flip_updates", h.flip_updates}});
    j["history"] = hist;
    return j;
}

} // namespace m3s
