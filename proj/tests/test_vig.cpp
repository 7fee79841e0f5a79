#include <catch2/catch_amalgamated.hpp>

#include "m3s/generate.hpp"
#include "m3s/vig.hpp"
#include "oracles.hpp"

using namespace m3s;

// 0-based translation of the worked example's adjacency table.
TEST_CASE("build_vig reproduces the worked-example adjacency") {
    const auto e1 = oracle::make_e1();
    const Vig vig = Vig::build(e1);
    REQUIRE(vig.num_vars() == 6);
    CHECK(vig.neighbors(0) == std::vector<std::uint32_t>{1, 2});
    CHECK(vig.neighbors(1) == std::vector<std::uint32_t>{0, 2, 4});
    CHECK(vig.neighbors(2) == std::vector<std::uint32_t>{0, 1, 4});
    CHECK(vig.neighbors(3) == std::vector<std::uint32_t>{4, 5});
    CHECK(vig.neighbors(4) == std::vector<std::uint32_t>{1, 2, 3, 5});
    CHECK(vig.neighbors(5) == std::vector<std::uint32_t>{3, 4});
    REQUIRE_THROWS_AS(vig.neighbors(6), std::out_of_range);
}

TEST_CASE("build_vig trivial graphs") {
    const Max3SatInstance empty(4, {});
    const Vig none = Vig::build(empty);
    for (std::uint32_t v = 0; v < 4; ++v) CHECK(none.neighbors(v).empty());

    const auto tri = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    const Vig t = Vig::build(tri);
    CHECK(t.neighbors(0) == std::vector<std::uint32_t>{1, 2});
    CHECK(t.degree(1) == 2);
    CHECK(t.adjacent(0, 2));
}

TEST_CASE("vig adjacency is symmetric, irreflexive, and means co-occurrence") {
    Rng rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        GeneratorConfig cfg{GeneratorKind::uniform,
                            static_cast<std::uint32_t>(4 + rng.below(30)), 3.0, 0.0, rng.next()};
        const auto inst = generate_uniform(cfg);
        const Vig vig = Vig::build(inst);

        std::vector<std::vector<char>> cooccur(inst.num_vars(),
                                               std::vector<char>(inst.num_vars(), 0));
        for (const auto& cl : inst.clauses())
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j) cooccur[cl.lits[i].var][cl.lits[j].var] = 1;

        for (std::uint32_t u = 0; u < inst.num_vars(); ++u) {
            REQUIRE_FALSE(vig.adjacent(u, u));
            for (std::uint32_t v = 0; v < inst.num_vars(); ++v) {
                REQUIRE(vig.adjacent(u, v) == static_cast<bool>(cooccur[u][v]));
                REQUIRE(vig.adjacent(u, v) == vig.adjacent(v, u));
            }
        }
    }
}

TEST_CASE("connected components restricted to the differing variables") {
    const auto e1 = oracle::make_e1();
    const Vig vig = Vig::build(e1);

    // x_a=110101 vs x_b=010000 differ at 1,4,6 (1-based)
    const std::vector<std::uint32_t> active{0, 3, 5};
    const auto comps = connected_components_restricted(vig, active);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<std::uint32_t>{0});
    CHECK(comps[1] == std::vector<std::uint32_t>{3, 5});

    CHECK(connected_components_restricted(vig, {}).empty());

    const Max3SatInstance edgeless(6, {});
    const Vig none = Vig::build(edgeless);
    const std::vector<std::uint32_t> pair{1, 4};
    const auto singles = connected_components_restricted(none, pair);
    REQUIRE(singles.size() == 2);
    CHECK(singles[0] == std::vector<std::uint32_t>{1});
    CHECK(singles[1] == std::vector<std::uint32_t>{4});
}

TEST_CASE("components partition the active set with no crossing edges") {
    Rng rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        GeneratorConfig cfg{GeneratorKind::uniform,
                            static_cast<std::uint32_t>(6 + rng.below(40)), 2.5, 0.0, rng.next()};
        const auto inst = generate_uniform(cfg);
        const Vig vig = Vig::build(inst);

        std::vector<std::uint32_t> active;
        for (std::uint32_t v = 0; v < inst.num_vars(); ++v)
            if (rng.coin()) active.push_back(v);

        const auto comps = connected_components_restricted(vig, active);
        std::vector<std::int32_t> owner(inst.num_vars(), -1);
        std::size_t covered = 0;
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (auto v : comps[c]) {
                REQUIRE(owner[v] == -1); // disjoint
                owner[v] = static_cast<std::int32_t>(c);
                ++covered;
            }
        REQUIRE(covered == active.size()); // union equals the active set
        for (auto v : active) REQUIRE(owner[v] >= 0);

        // no VIG edge connects two different components
        for (auto u : active)
            for (auto w : vig.neighbors(u))
                if (owner[w] >= 0) REQUIRE(owner[u] == owner[w]);
    }
}
