#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "m3s/instance.hpp"

namespace m3s {

// Variable Interaction Graph: u and v are adjacent iff some clause contains
// both. For Max3Sat the clause-membership relation already carries every
// dependency, so the graph is built straight from the clause list.
class Vig {
public:
    static Vig build(const Max3SatInstance& inst) {
        Vig g;
        g.adj_.assign(inst.num_vars(), {});
        for (const auto& cl : inst.clauses()) {
            const auto& l = cl.lits;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j) g.adj_[l[i].var].push_back(l[j].var);
        }
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
        return g;
    }

    std::size_t num_vars() const { return adj_.size(); }

    const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const {
        if (v >= adj_.size()) throw std::out_of_range("Vig::neighbors: variable out of range");
        return adj_[v];
    }

    std::size_t degree(std::uint32_t v) const { return neighbors(v).size(); }

    bool adjacent(std::uint32_t u, std::uint32_t v) const {
        const auto& nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

private:
    std::vector<std::vector<std::uint32_t>> adj_;
};

inline Vig build_vig(const Max3SatInstance& inst) { return Vig::build(inst); }

// Connected components of the subgraph induced on `active`. Each component
// is sorted ascending and the list is ordered by smallest element.
inline std::vector<std::vector<std::uint32_t>> connected_components_restricted(
    const Vig& vig, std::span<const std::uint32_t> active) {
    std::vector<char> in_active(vig.num_vars(), 0);
    for (auto v : active) {
        if (v >= vig.num_vars())
            throw std::out_of_range("connected_components_restricted: variable out of range");
        in_active[v] = 1;
    }

    std::vector<std::uint32_t> sorted(active.begin(), active.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<char> seen(vig.num_vars(), 0);
    std::vector<std::vector<std::uint32_t>> components;
    std::vector<std::uint32_t> stack;
    for (auto start : sorted) {
        if (seen[start]) continue;
        std::vector<std::uint32_t> comp;
        stack.push_back(start);
        seen[start] = 1;
        while (!stack.empty()) {
            const std::uint32_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto w : vig.neighbors(v))
                if (in_active[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

} // namespace m3s
