#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "m3s/dimacs.hpp"
#include "m3s/generate.hpp"
#include "m3s/instance.hpp"
#include "oracles.hpp"

using namespace m3s;

static const char* kE1Text = "p cnf 6 3\n1 -2 3 0\n-2 3 5 0\n-4 5 -6 0\n";

TEST_CASE("parse_dimacs reads the worked example") {
    const auto inst = parse_dimacs(kE1Text);
    REQUIRE(inst.num_vars() == 6);
    REQUIRE(inst.num_clauses() == 3);
    REQUIRE(inst.clause(0).lits[0] == Literal{0, false});
    REQUIRE(inst.clause(0).lits[1] == Literal{1, true});
    REQUIRE(inst.clause(0).lits[2] == Literal{2, false});
    REQUIRE(inst.clause(2).lits[0] == Literal{3, true});
    REQUIRE(inst.clause(2).lits[2] == Literal{5, true});

    // membership index is the exact inverse of clause -> variables
    for (std::uint32_t v = 0; v < inst.num_vars(); ++v) {
        std::vector<std::uint32_t> expect;
        for (std::uint32_t c = 0; c < inst.num_clauses(); ++c)
            for (const auto& lit : inst.clause(c).lits)
                if (lit.var == v) expect.push_back(c);
        REQUIRE(inst.clauses_of(v) == expect);
    }
}

TEST_CASE("parse_dimacs accepts a minimal instance and comments") {
    const auto inst = parse_dimacs("c comment\np cnf 3 1\nc another\n1 2 3 0\n");
    REQUIRE(inst.num_vars() == 3);
    REQUIRE(inst.num_clauses() == 1);
}

TEST_CASE("parse_dimacs rejects malformed input with line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_dimacs(text);
        } catch (const DimacsError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("p cnf 3 1\n1 1 2 0\n") == 2);       // repeated variable
    CHECK(line_of("p cnf 3 1\n1 2 0\n") == 2);         // arity != 3
    CHECK(line_of("p cnf 3 1\n1 2 3 4 0\n") == 2);     // arity != 3
    CHECK(line_of("p cnf 3 1\n1 2 4 0\n") == 2);       // out of range
    CHECK(line_of("p wrong 3 1\n1 2 3 0\n") == 1);     // malformed header
    CHECK(line_of("p cnf 3 2\n1 2 3 0\n") == 2);       // clause count mismatch
    CHECK(line_of("p cnf 3 1\n1 2 3 0\n1 2 3 0\n") == 3);
    CHECK(line_of("1 2 3 0\n") == 1);                  // clause before header
    CHECK(line_of("p cnf 3 1\n1 2 3\n") == 2);         // missing terminator
}

TEST_CASE("write_dimacs round trips") {
    const auto e1 = parse_dimacs(kE1Text);
    REQUIRE(write_dimacs(e1) == kE1Text);
    REQUIRE(parse_dimacs(write_dimacs(e1)) == e1);

    const auto one = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    REQUIRE(write_dimacs(one) == "p cnf 3 1\n1 2 3 0\n");

    // parse . write . parse is a fixed point on generated instances
    GeneratorConfig cfg{GeneratorKind::uniform, 40, 3.5, 0.0, 11};
    const auto gen = generate_uniform(cfg);
    const auto reparsed = parse_dimacs(write_dimacs(gen));
    REQUIRE(reparsed == gen);
    REQUIRE(write_dimacs(reparsed) == write_dimacs(gen));
}

TEST_CASE("clause_sat_count counts satisfying literals") {
    const auto e1 = parse_dimacs(kE1Text);
    const Clause& c1 = e1.clause(0); // (x1 v -x2 v x3)
    CHECK(clause_sat_count(c1, Bits::from_string("100000")) == 2);
    CHECK(clause_sat_count(c1, Bits::from_string("010000")) == 0);
    const auto all_pos = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    CHECK(clause_sat_count(all_pos.clause(0), Bits::from_string("111")) == 3);
}

TEST_CASE("evaluate matches the worked example profiles") {
    const auto e1 = parse_dimacs(kE1Text);
    const SatProfile pa = evaluate(e1, Bits::from_string("110101"));
    CHECK(pa == SatProfile{2, 1, 0, 0});
    CHECK(pa.satisfied() == 1);

    const SatProfile pb = evaluate(e1, Bits::from_string("010000"));
    CHECK(pb == SatProfile{2, 0, 1, 0});
    CHECK(pb.satisfied() == 1);

    CHECK(evaluate(e1, Bits::from_string("110000")).satisfied() == 2);
    CHECK(evaluate(e1, Bits::from_string("010101")).satisfied() == 0);

    REQUIRE_THROWS_AS(evaluate(e1, Bits(5)), std::invalid_argument);
}

TEST_CASE("evaluate agrees with per-clause counting on random pairs") {
    Rng rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        GeneratorConfig cfg{GeneratorKind::uniform,
                            static_cast<std::uint32_t>(5 + rng.below(40)), 3.0, 0.0, rng.next()};
        const auto inst = generate_uniform(cfg);
        const Bits x = random_bits(inst.num_vars(), rng);
        const SatProfile p = evaluate(inst, x);
        REQUIRE(p == oracle::profile(inst, x));
        REQUIRE(p.total() == static_cast<std::int64_t>(inst.num_clauses()));
        REQUIRE(p.satisfied() == static_cast<std::int64_t>(inst.num_clauses()) - p.c0);
    }
}

TEST_CASE("generate_uniform clause counts and determinism") {
    GeneratorConfig cfg{GeneratorKind::uniform, 150, 4.27, 0.0, 0};
    const auto inst = generate_uniform(cfg);
    REQUIRE(inst.num_clauses() == 640);
    REQUIRE(inst.num_vars() == 150);

    GeneratorConfig small{GeneratorKind::uniform, 100, 3.0, 0.0, 5};
    REQUIRE(generate_uniform(small).num_clauses() == 300);

    const auto again = generate_uniform(cfg);
    REQUIRE(again == inst);
    REQUIRE(write_dimacs(again) == write_dimacs(inst));

    GeneratorConfig other = cfg;
    other.seed = 1;
    REQUIRE_FALSE(generate_uniform(other) == inst);

    GeneratorConfig bad = cfg;
    bad.n = 2;
    REQUIRE_THROWS_AS(generate_uniform(bad), std::invalid_argument);
}

TEST_CASE("generated clauses always use three distinct variables") {
    Rng rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        GeneratorConfig cfg;
        cfg.kind = trial % 2 ? GeneratorKind::scale_free : GeneratorKind::uniform;
        cfg.n = static_cast<std::uint32_t>(4 + rng.below(60));
        cfg.cr = 2.0 + 2.0 * rng.unit();
        cfg.beta = 2.0 + 6.0 * rng.unit();
        cfg.seed = rng.next();
        const auto inst = generate(cfg);
        REQUIRE(inst.num_clauses() == cfg.num_clauses());
        for (const auto& cl : inst.clauses()) {
            std::set<std::uint32_t> vars{cl.lits[0].var, cl.lits[1].var, cl.lits[2].var};
            REQUIRE(vars.size() == 3);
        }
    }
}

TEST_CASE("generate_scale_free degree law") {
    // Pool literal-slot counts per variable over 10 instances and compare
    // against the sampling law and against uniform expectations.
    const std::uint32_t n = 100;
    const double cr = 4.0;
    auto pooled_counts = [&](double beta) {
        std::vector<std::int64_t> counts(n, 0);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            GeneratorConfig cfg{GeneratorKind::scale_free, n, cr, beta, seed};
            const auto inst = generate_scale_free(cfg);
            for (const auto& cl : inst.clauses())
                for (const auto& lit : cl.lits) ++counts[lit.var];
        }
        return counts;
    };

    const double slots = 10.0 * 400.0 * 3.0;
    std::vector<double> law(n), uniform(n, slots / n);
    {
        double tot = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            law[i] = std::pow(double(i + 1), -1.0 / 8.0);
            tot += law[i];
        }
        for (auto& w : law) w = w / tot * slots;
    }

    const auto beta8 = pooled_counts(8.0);
    // heaviest degree on the rank-1 variable
    for (std::uint32_t v = 1; v < n; ++v) REQUIRE(beta8[0] > beta8[v]);
    // consistent with the law, far from uniform (chi-square, df = 99:
    // mean 99, sd ~14; 200 is > 7 sd above the mean)
    CHECK(oracle::chi_square(beta8, law) < 200.0);
    CHECK(oracle::chi_square(beta8, uniform) > 400.0);

    // beta -> very large degenerates to the uniform draw
    const auto flat = pooled_counts(1e6);
    CHECK(oracle::chi_square(flat, uniform) < 200.0);

    // determinism and parameter validation
    GeneratorConfig cfg{GeneratorKind::scale_free, n, cr, 8.0, 7};
    REQUIRE(generate_scale_free(cfg) == generate_scale_free(cfg));
    cfg.beta = 1.0;
    REQUIRE_THROWS_AS(generate_scale_free(cfg), std::invalid_argument);
}
