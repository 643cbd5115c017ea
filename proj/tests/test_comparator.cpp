#include <doctest.h>

#include <random>
#include <set>

#include "revcmp/comparator.hpp"
#include "revcmp/costmodel.hpp"
#include "revcmp/error.hpp"
#include "revcmp/oracles.hpp"

using namespace revcmp;

namespace {

struct Operands {
    std::uint64_t a;
    std::uint64_t b;
};

BitVector input_of(Operands o, unsigned n) {
    BitVector v(2 * n);
    for (unsigned i = 0; i < n; ++i) {
        v[i] = (o.a >> i) & 1u;
        v[n + i] = (o.b >> i) & 1u;
    }
    return v;
}

}  // namespace

TEST_CASE("cells match their budgets") {
    const std::pair<CellKind, Circuit> cells[] = {{CellKind::In, build_in_cell()},
                                                  {CellKind::Chain, build_chain_cell()},
                                                  {CellKind::Final, build_final_cell()}};
    for (const auto& [kind, c] : cells) {
        const CellTargets t = cell_targets(kind);
        const MetricsReport m = metrics(c);
        CAPTURE(c.name());
        CHECK(m.gate_count == t.gates);
        CHECK(m.constant_inputs == t.constants);
        CHECK(m.garbage_outputs == t.garbage);
    }
}

TEST_CASE("chain cell folds one bit pair") {
    const Circuit cell = build_chain_cell();
    // inputs in line order: a, b, Q_in (EQ), P_in (GT)
    for (unsigned a = 0; a < 2; ++a) {
        for (unsigned b = 0; b < 2; ++b) {
            for (unsigned eq = 0; eq < 2; ++eq) {
                for (unsigned gt = 0; gt < 2; ++gt) {
                    if (eq && gt) continue;
                    const auto r = simulate(cell, BitVector{std::uint8_t(a), std::uint8_t(b),
                                                            std::uint8_t(eq), std::uint8_t(gt)});
                    CHECK(r.named.at("P_out") == bool(gt || (eq && a && !b)));
                    CHECK(r.named.at("Q_out") == bool(eq && a == b));
                }
            }
        }
    }
}

TEST_CASE("final cell") {
    const Circuit cell = build_final_cell();
    const auto lt = simulate(cell, BitVector{0, 0}).named;
    CHECK(lt.at("LT"));
    CHECK_FALSE(lt.at("EQ"));
    CHECK_FALSE(lt.at("GT"));
    CHECK(simulate(cell, BitVector{1, 0}).named.at("GT"));
    CHECK(simulate(cell, BitVector{0, 1}).named.at("EQ"));
}

TEST_CASE("exhaustive equivalence for small widths") {
    for (unsigned n = 1; n <= 8; ++n) {
        CAPTURE(n);
        const auto r = verify_comparator(n, Exhaustive{});
        CHECK(r.passed());
        CHECK(r.trials == (std::size_t{1} << (2 * n)));
    }
}

TEST_CASE("random verification for wide comparators") {
    for (unsigned n : {12u, 32u, 64u}) {
        CAPTURE(n);
        const auto r = verify_comparator(n, Random{5000, 42});
        CHECK(r.passed());
        CHECK(r.trials == 5000 + 4 * n + 2);
    }
}

TEST_CASE("edge vectors") {
    const unsigned n = 4;
    const auto edges = comparator_edge_vectors(n);
    CHECK(edges.size() == 4 * n + 2);
    std::set<BitVector> distinct(edges.begin(), edges.end());
    CHECK(distinct.size() == edges.size());
    CHECK(distinct.contains(input_of({0, 0}, n)));
    CHECK(distinct.contains(input_of({15, 15}, n)));
    CHECK(distinct.contains(input_of({0, 8}, n)));
    CHECK(distinct.contains(input_of({15, 7}, n)));
}

TEST_CASE("at most one of GT and EQ after every chain cell") {
    std::mt19937_64 rng(9);
    for (unsigned n : {2u, 3u, 5u, 16u}) {
        const ComparatorLayout layout = assemble_comparator(n);
        CHECK(layout.boundaries.size() == n);
        const std::uint64_t mask = (1ULL << n) - 1;
        for (int t = 0; t < 300; ++t) {
            const Operands o{rng() & mask, rng() & mask};
            BitVector state = layout.circuit.load(input_of(o, n));
            std::size_t done = 0;
            for (std::size_t k = 0; k < layout.boundaries.size(); ++k) {
                const ChainBoundary& bd = layout.boundaries[k];
                layout.circuit.run(state, done, bd.gate_end);
                done = bd.gate_end;
                CHECK_FALSE((state[bd.gt_line] && state[bd.eq_line]));
                // Prefix of the top k+1 bits decides the carried values.
                const unsigned shift = n - 1 - static_cast<unsigned>(k);
                const auto prefix = compare_oracle(o.a >> shift, o.b >> shift, n - shift);
                CHECK(bool(state[bd.gt_line]) == prefix.gt);
                CHECK(bool(state[bd.eq_line]) == prefix.eq);
            }
        }
    }
}

TEST_CASE("msb_lt is the top-bit comparison") {
    const unsigned n = 4;
    const Circuit c = build_comparator(n);
    REQUIRE(c.terminal("msb_lt") != nullptr);
    for (std::uint64_t a = 0; a < 16; ++a) {
        for (std::uint64_t b = 0; b < 16; ++b) {
            const auto r = simulate(c, input_of({a, b}, n));
            CHECK(r.named.at("msb_lt") == (((a >> 3) & 1u) < ((b >> 3) & 1u)));
        }
    }
    CHECK(build_comparator(1).auxiliary_outputs().empty());
}

TEST_CASE("swapping operands swaps LT and GT") {
    std::mt19937_64 rng(13);
    const unsigned n = 20;
    const Circuit c = build_comparator(n);
    for (int t = 0; t < 500; ++t) {
        const Operands o{rng() & 0xFFFFF, rng() & 0xFFFFF};
        const auto x = simulate(c, input_of(o, n)).named;
        const auto y = simulate(c, input_of({o.b, o.a}, n)).named;
        CHECK(x.at("LT") == y.at("GT"));
        CHECK(x.at("GT") == y.at("LT"));
        CHECK(x.at("EQ") == y.at("EQ"));
    }
}

TEST_CASE("metrics match closed forms for every width") {
    for (unsigned n = 1; n <= 64; ++n) {
        const MetricsReport m = metrics(build_comparator(n));
        const ComparatorCounts p = predicted_metrics(n);
        CAPTURE(n);
        CHECK(long(m.gate_count) == p.gates);
        CHECK(long(m.garbage_outputs) == p.garbage);
        CHECK(long(m.constant_inputs) == p.constants);
        CHECK(m.primary_inputs == 2 * n);
        CHECK(m.primary_outputs == 3);
    }
    CHECK_THROWS_AS(build_comparator(0), Error);
    CHECK_THROWS_AS(build_comparator(65), Error);
}

TEST_CASE("reference and interface detection") {
    CHECK(comparator_width(build_comparator(7)) == 7);
    CHECK(comparator_width(build_chain_cell()) == 0);
    CHECK_THROWS_AS(compare_reference(build_chain_cell()), Error);
    const Reference ref = compare_reference(build_comparator(3));
    CHECK(ref(input_of({6, 2}, 3)) == BitVector{0, 0, 1});
}

TEST_CASE("one-hot invariant") {
    const auto inv = one_hot_invariant();
    CHECK(inv(BitVector{0, 1, 0}));
    CHECK_FALSE(inv(BitVector{0, 0, 0}));
    CHECK_FALSE(inv(BitVector{1, 0, 1}));
}

TEST_CASE("conformance report") {
    const std::string report = comparator_conformance(build_comparator(8), 8);
    CHECK(report.find("34") != std::string::npos);
    CHECK(report.find("29") != std::string::npos);
    CHECK(report.find("17") != std::string::npos);
    CHECK(report.find("(0,0,0,0)") != std::string::npos);
    CHECK(report.find("(0,1,0,1)") != std::string::npos);
    CHECK(report.find("TR") != std::string::npos);
}
