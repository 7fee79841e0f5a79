#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "m3s/bits.hpp"
#include "m3s/instance.hpp"

namespace m3s {

// Partial assignment common to a set of (globally optimal) solutions:
// `mask` marks the fixed positions, `values` carries their bits (zero off
// the mask).
struct Backbone {
    Bits mask;
    Bits values;
    std::optional<std::int64_t> optimum;
    std::uint64_t optima_count = 0;

    std::size_t size() const { return mask.count(); }

    std::optional<bool> fixed_value(std::uint32_t v) const {
        if (!mask.get(v)) return std::nullopt;
        return values.get(v);
    }
};

// Bitwise intersection of a non-empty set of equal-length assignments.
// The caller decides what the set means (usually: all known optima).
inline Backbone backbone_from_set(const std::vector<Bits>& optima) {
    if (optima.empty()) throw std::invalid_argument("backbone_from_set: empty solution set");
    Backbone b;
    b.values = optima.front();
    b.mask = Bits(optima.front().size(), true);
    for (const auto& x : optima) {
        if (x.size() != b.values.size())
            throw std::invalid_argument("backbone_from_set: solution length mismatch");
        b.mask.and_not(x ^ b.values);
    }
    b.values &= b.mask;
    b.optima_count = optima.size();
    return b;
}

// Enumerate all 2^n assignments in Gray-code order, tracking the maximum
// fitness and the bit positions every maximizer agrees on. Incremental
// clause bookkeeping keeps each step at O(degree).
inline Backbone backbone_exhaustive(const Max3SatInstance& inst, std::size_t max_vars = 26) {
    const std::size_t n = inst.num_vars();
    if (n > max_vars)
        throw std::invalid_argument("backbone_exhaustive: instance exceeds the exhaustive limit");

    Bits cur(n);
    std::vector<std::uint8_t> sat(inst.num_clauses(), 0);
    std::int64_t fit = 0;
    for (std::size_t c = 0; c < inst.num_clauses(); ++c) {
        const int k = clause_sat_count(inst.clause(c), cur);
        sat[c] = static_cast<std::uint8_t>(k);
        fit += k > 0;
    }

    std::int64_t best = fit;
    Bits ref = cur;
    Bits agree(n, true);
    std::uint64_t count = 1;

    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        const auto v = static_cast<std::uint32_t>(std::countr_zero(i));
        cur.flip(v);
        for (auto c : inst.clauses_of(v)) {
            bool now = false;
            for (const auto& lit : inst.clause(c).lits)
                if (lit.var == v) { now = lit.value_in(cur); break; }
            const int old_k = sat[c];
            const int new_k = old_k + (now ? 1 : -1);
            sat[c] = static_cast<std::uint8_t>(new_k);
            if (old_k == 0) ++fit;
            if (new_k == 0) --fit;
        }
        if (fit > best) {
            best = fit;
            ref = cur;
            agree = Bits(n, true);
            count = 1;
        } else if (fit == best) {
            agree.and_not(cur ^ ref);
            ++count;
        }
    }

    Backbone b;
    b.mask = agree;
    b.values = ref & agree;
    b.optimum = best;
    b.optima_count = count;
    return b;
}

// Number of fixed backbone positions x agrees with.
inline std::int64_t overlap(const Bits& x, const Backbone& b) {
    Bits same = x ^ b.values;
    same.invert();
    same &= b.mask;
    return static_cast<std::int64_t>(same.count());
}

inline std::int64_t back_dist(const Bits& x, const Backbone& b) {
    return static_cast<std::int64_t>(b.size()) - overlap(x, b);
}

// Near-optimal solutions split the way the backbone analysis wants them:
// class A has exactly one unsatisfied clause, class B at least two but
// still >= 99.5% of clauses satisfied. Optimal solutions (all clauses
// satisfied) and anything below the bar belong to neither class.
struct HighQualitySet {
    std::vector<Bits> class_a;
    std::vector<Bits> class_b;
};

// ceil(99.5% of m) computed in integers so the bar never drifts.
inline std::int64_t high_quality_bar(std::int64_t m) { return (995 * m + 999) / 1000; }

inline HighQualitySet classify_high_quality(const Max3SatInstance& inst,
                                            const std::vector<Bits>& solutions,
                                            std::optional<std::int64_t> min_satisfied = {}) {
    const auto m = static_cast<std::int64_t>(inst.num_clauses());
    const std::int64_t bar = min_satisfied.value_or(high_quality_bar(m));
    HighQualitySet hq;
    for (const auto& x : solutions) {
        const std::int64_t f = evaluate(inst, x).satisfied();
        if (f == m - 1)
            hq.class_a.push_back(x);
        else if (f <= m - 2 && f >= bar)
            hq.class_b.push_back(x);
    }
    return hq;
}

struct OverlapHistogram {
    std::map<std::int64_t, std::int64_t> class_a;
    std::map<std::int64_t, std::int64_t> class_b;
};

inline OverlapHistogram overlap_distribution(const Backbone& b, const HighQualitySet& hq) {
    OverlapHistogram h;
    for (const auto& x : hq.class_a) ++h.class_a[overlap(x, b)];
    for (const auto& x : hq.class_b) ++h.class_b[overlap(x, b)];
    return h;
}

inline std::string overlap_distribution_csv(const OverlapHistogram& h) {
    std::ostringstream out;
    out << "class,overlap,count\n";
    for (const auto& [ov, cnt] : h.class_a) out << "A," << ov << ',' << cnt << '\n';
    for (const auto& [ov, cnt] : h.class_b) out << "B," << ov << ',' << cnt << '\n';
    return out.str();
}

struct C1C2Row {
    std::int64_t overlap = 0;
    std::int64_t count = 0;
    std::int64_t c1_min = 0, c1_max = 0;
    std::int64_t c2_min = 0, c2_max = 0;
    double c1_mean = 0.0, c2_mean = 0.0;
};

// Per overlap value, min/mean/max of the once- and twice-satisfied clause
// counts over the whole high-quality set.
inline std::vector<C1C2Row> c1c2_by_overlap(const Max3SatInstance& inst, const Backbone& b,
                                            const HighQualitySet& hq) {
    struct Acc {
        std::int64_t count = 0;
        std::int64_t c1_min = 0, c1_max = 0, c1_sum = 0;
        std::int64_t c2_min = 0, c2_max = 0, c2_sum = 0;
    };
    std::map<std::int64_t, Acc> groups;
    auto feed = [&](const Bits& x) {
        const SatProfile p = evaluate(inst, x);
        Acc& a = groups.try_emplace(overlap(x, b)).first->second;
        if (a.count == 0) {
            a.c1_min = a.c1_max = p.c1;
            a.c2_min = a.c2_max = p.c2;
        } else {
            a.c1_min = std::min(a.c1_min, p.c1);
            a.c1_max = std::max(a.c1_max, p.c1);
            a.c2_min = std::min(a.c2_min, p.c2);
            a.c2_max = std::max(a.c2_max, p.c2);
        }
        a.c1_sum += p.c1;
        a.c2_sum += p.c2;
        ++a.count;
    };
    for (const auto& x : hq.class_a) feed(x);
    for (const auto& x : hq.class_b) feed(x);

    std::vector<C1C2Row> rows;
    for (const auto& [ov, a] : groups) {
        C1C2Row r;
        r.overlap = ov;
        r.count = a.count;
        r.c1_min = a.c1_min;
        r.c1_max = a.c1_max;
        r.c2_min = a.c2_min;
        r.c2_max = a.c2_max;
        r.c1_mean = static_cast<double>(a.c1_sum) / static_cast<double>(a.count);
        r.c2_mean = static_cast<double>(a.c2_sum) / static_cast<double>(a.count);
        rows.push_back(r);
    }
    return rows;
}

inline std::string c1c2_csv(const std::vector<C1C2Row>& rows) {
    std::ostringstream out;
    out << "overlap,count,c1_min,c1_mean,c1_max,c2_min,c2_mean,c2_max\n";
    for (const auto& r : rows)
        out << r.overlap << ',' << r.count << ',' << r.c1_min << ',' << r.c1_mean << ','
            << r.c1_max << ',' << r.c2_min << ',' << r.c2_mean << ',' << r.c2_max << '\n';
    return out.str();
}

// Mean backbone distance of the top fraction (by fitness, stable on ties)
// of the supplied solutions. High values flag instances whose best-found
// solutions sit far from the globally optimal region.
inline double difficulty(const Max3SatInstance& inst, const Backbone& b,
                         const std::vector<Bits>& solutions, double fraction = 0.10) {
    if (solutions.empty()) throw std::invalid_argument("difficulty: empty solution list");
    if (!(fraction > 0.0) || fraction > 1.0)
        throw std::invalid_argument("difficulty: fraction must be in (0,1]");

    std::vector<std::size_t> order(solutions.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::int64_t> fit(solutions.size());
    for (std::size_t i = 0; i < solutions.size(); ++i)
        fit[i] = evaluate(inst, solutions[i]).satisfied();
    std::stable_sort(order.begin(), order.end(),
                     [&fit](std::size_t a, std::size_t c) { return fit[a] > fit[c]; });

    auto top = static_cast<std::size_t>(
        std::ceil(fraction * static_cast<double>(solutions.size())));
    top = std::clamp<std::size_t>(top, 1, solutions.size());

    std::int64_t sum = 0;
    for (std::size_t i = 0; i < top; ++i) sum += back_dist(solutions[order[i]], b);
    return static_cast<double>(sum) / static_cast<double>(top);
}

namespace detail {

// Ranks 1..n with ties replaced by the group average.
inline std::vector<double> average_ranks(std::span<const double> v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&v](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(v.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
        const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

} // namespace detail

// Spearman rank correlation with average ranks on ties. NaN when either
// column is constant.
inline double spearman(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("spearman: length mismatch");
    if (xs.size() < 2) throw std::invalid_argument("spearman: need at least 2 points");
    const auto rx = detail::average_ranks(xs);
    const auto ry = detail::average_ranks(ys);
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= n;
    my /= n;
    double cov = 0, vx = 0, vy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = rx[i] - mx;
        const double dy = ry[i] - my;
        cov += dx * dy;
        vx += dx * dx;
        vy += dy * dy;
    }
    return cov / std::sqrt(vx * vy);
}

// Solutions file: one assignment per line as a 0/1 string of length n.
inline std::vector<Bits> read_solutions(std::istream& in, std::size_t n) {
    std::vector<Bits> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty()) continue;
        if (line.size() != n)
            throw std::runtime_error("solutions line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(n) + " bits, got " +
                                     std::to_string(line.size()));
        try {
            out.push_back(Bits::from_string(line));
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("solutions line " + std::to_string(line_no) +
                                     ": expected only '0'/'1'");
        }
    }
    return out;
}

inline void write_solutions(std::ostream& out, const std::vector<Bits>& solutions) {
    for (const auto& x : solutions) out << x.to_string() << '\n';
}

} // namespace m3s
