#include <doctest.h>

#include <random>

#include "revcmp/comparator.hpp"
#include "revcmp/decoder.hpp"
#include "revcmp/netlist.hpp"
#include "revcmp/oracles.hpp"
#include "revcmp/verify.hpp"

using namespace revcmp;

TEST_CASE("new_circuit") {
    const Circuit two("c", {PrimaryInput{"a"}, PrimaryInput{"b"}});
    CHECK(two.line_count() == 2);
    CHECK(metrics(two).constant_inputs == 0);

    const Circuit four("c", {PrimaryInput{"a"}, PrimaryInput{"b"}, ConstantInput{false},
                             ConstantInput{true}});
    CHECK(metrics(four).constant_inputs == 2);

    CHECK_THROWS_AS(Circuit("empty", {}), Error);
    try {
        Circuit("dup", {PrimaryInput{"a"}, PrimaryInput{"a"}});
        FAIL("duplicate accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DuplicateName);
    }
}

TEST_CASE("append_gate and simulate") {
    SUBCASE("NOT") {
        Circuit c = append_gate(new_circuit("n", {PrimaryInput{"a"}}), "NOT", {0});
        c.designate_output(0, "y");
        CHECK(simulate(c, BitVector{1}).primary == BitVector{0});
        CHECK(metrics(c).gate_count == 1);
    }
    SUBCASE("FG on (0,1)") {
        Circuit c = append_gate(new_circuit("f", {PrimaryInput{"a"}, PrimaryInput{"b"}}), "FG",
                                {0, 1});
        CHECK(simulate(c, BitVector{1, 0}).lines == BitVector{1, 1});
    }
    SUBCASE("arity and range violations") {
        Circuit c("w", {PrimaryInput{"a"}, PrimaryInput{"b"}, PrimaryInput{"c"}});
        auto kind_of = [&](auto&& fn) {
            try {
                fn();
            } catch (const Error& e) {
                return e.kind();
            }
            return ErrorKind::NoData;
        };
        CHECK(kind_of([&] { c.add_gate("TG", {0, 1}); }) == ErrorKind::Wiring);
        CHECK(kind_of([&] { c.add_gate("FG", {0, 3}); }) == ErrorKind::Wiring);
        CHECK(kind_of([&] { c.add_gate("FG", {1, 1}); }) == ErrorKind::Wiring);
        CHECK(c.gates().empty());
    }
    SUBCASE("empty circuit echoes its inputs") {
        Circuit c("id", {PrimaryInput{"a"}, PrimaryInput{"b"}});
        c.designate_output(0, "x");
        c.designate_output(1, "y");
        for (std::uint64_t code = 0; code < 4; ++code) {
            CHECK(simulate(c, unpack_bits(code, 2)).primary == unpack_bits(code, 2));
        }
    }
}

TEST_CASE("simulate by name") {
    const Circuit cmp = build_in_cell();
    const auto r = simulate(cmp, std::map<std::string, bool>{{"a", true}, {"b", false}});
    CHECK(r.named.at("GT"));
    CHECK_FALSE(r.named.at("EQ"));
    CHECK_FALSE(r.named.at("LT"));

    const auto d = simulate(build_decoder(2), std::map<std::string, bool>{{"a0", true}, {"a1", false}});
    CHECK(d.named.at("d1"));
    CHECK_FALSE(d.named.at("d0"));
    CHECK_FALSE(d.named.at("d2"));
    CHECK_FALSE(d.named.at("d3"));

    auto assignment_error = [&](const std::map<std::string, bool>& m) {
        try {
            simulate(cmp, m);
        } catch (const Error& e) {
            return e.kind() == ErrorKind::Assignment;
        }
        return false;
    };
    CHECK(assignment_error({{"a", true}}));
    CHECK(assignment_error({{"a", true}, {"b", true}, {"z", false}}));
    CHECK_THROWS_AS(simulate(cmp, BitVector{1}), Error);
}

TEST_CASE("output designation rules") {
    Circuit c("o", {PrimaryInput{"a"}, PrimaryInput{"b"}});
    c.designate_output(0, "y");
    try {
        c.designate_auxiliary(0, "z");
        FAIL("double designation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RoleConflict);
    }
    try {
        c.designate_output(1, "y");
        FAIL("duplicate name");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DuplicateName);
    }
    CHECK_THROWS_AS(c.designate_output(1, "bad name"), Error);
    CHECK(c.is_garbage(1));
}

TEST_CASE("truth_map") {
    Circuit id("id", {PrimaryInput{"a"}, PrimaryInput{"b"}});
    id.designate_output(0, "a_out");
    id.designate_output(1, "b_out");
    const auto table = truth_map(id);
    REQUIRE(table.size() == 4);
    for (std::uint64_t code = 0; code < 4; ++code) CHECK(pack_bits(table[code]) == code);

    // In-cell against the 1-bit comparator oracle, outputs (LT, EQ, GT).
    const auto cell = truth_map(build_in_cell());
    for (std::uint64_t a = 0; a < 2; ++a) {
        for (std::uint64_t b = 0; b < 2; ++b) {
            const auto r = compare_oracle(a, b, 1);
            CHECK(cell[a | (b << 1)] == BitVector{r.lt, r.eq, r.gt});
        }
    }

    std::vector<InputRole> wide;
    for (int i = 0; i < 25; ++i) wide.push_back(PrimaryInput{"x" + std::to_string(i)});
    try {
        truth_map(Circuit("wide", wide));
        FAIL("no TooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
}

TEST_CASE("metrics") {
    const Circuit empty("e", {PrimaryInput{"a"}, PrimaryInput{"b"}, PrimaryInput{"c"}});
    const MetricsReport m = metrics(empty);
    CHECK(m.line_count == 3);
    CHECK(m.gate_count == 0);
    CHECK(m.constant_inputs == 0);
    CHECK(m.depth == 0);
    CHECK(m.garbage_outputs == 3);

    Circuit chain("d", {PrimaryInput{"a"}, PrimaryInput{"b"}, PrimaryInput{"c"}});
    chain.add_gate("NOT", {0}).add_gate("NOT", {2}).add_gate("FG", {0, 1}).add_gate("FG", {1, 2});
    CHECK(metrics(chain).depth == 3);

    for (unsigned n : {1u, 2u, 5u}) {
        const MetricsReport r = metrics(build_comparator(n));
        CHECK(r.garbage_outputs + r.auxiliary_outputs + r.primary_outputs == r.line_count);
        CHECK(r.primary_inputs + r.constant_inputs == r.line_count);
    }
}

TEST_CASE("full line-state map is a permutation for built circuits") {
    for (const Circuit& c : {build_in_cell(), build_chain_cell(), build_final_cell(),
                             build_comparator(1), build_comparator(2), build_comparator(3),
                             build_base_decoder(), build_decoder(3)}) {
        CAPTURE(c.name());
        CHECK(c.line_count() <= 16);
        CHECK(line_map_is_permutation(c));
    }
    CHECK_THROWS_AS(line_map_is_permutation(build_comparator(4)), Error);
}

TEST_CASE("frame property: a gate leaves untouched lines alone") {
    std::mt19937_64 rng(11);
    const std::vector<std::string> names{"NOT", "FG", "TG", "FRG", "PG", "TR", "INVENTIVE"};
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t lines = 4 + rng() % 8;
        std::vector<InputRole> roles;
        for (std::size_t i = 0; i < lines; ++i) roles.push_back(PrimaryInput{"x" + std::to_string(i)});
        Circuit c("frame", roles);
        const auto gate = shared_library_gate(names[rng() % names.size()]);
        std::vector<std::size_t> all(lines);
        for (std::size_t i = 0; i < lines; ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<std::size_t> bound(all.begin(), all.begin() + gate->width());
        c.add_gate(gate, bound);
        BitVector state(lines);
        for (auto& b : state) b = rng() & 1u;
        BitVector after = state;
        c.run(after);
        for (std::size_t i = 0; i < lines; ++i) {
            if (std::find(bound.begin(), bound.end(), i) == bound.end()) CHECK(after[i] == state[i]);
        }
    }
}

TEST_CASE("verify_against reports counterexamples") {
    const Circuit good = build_comparator(2);
    const auto pass = verify_against(good, compare_reference(good), Exhaustive{});
    CHECK(pass.passed());
    CHECK(pass.trials == 16);

    // Flip one chain-cell NOT: the equality path breaks.
    Circuit bad("bad", good.input_roles());
    for (std::size_t g = 0; g < good.gates().size(); ++g) {
        const auto& inst = good.gates()[g];
        if (g != 5) bad.add_gate(inst.gate, inst.lines);
    }
    for (const auto& t : good.terminals()) {
        if (t.kind == TerminalKind::Primary) bad.designate_output(t.line, t.name);
    }
    const auto fail = verify_against(bad, compare_reference(bad), Exhaustive{});
    CHECK_FALSE(fail.passed());
    REQUIRE(fail.counterexample.has_value());
    CHECK(fail.counterexample->expected != fail.counterexample->actual);
    CHECK(simulate(bad, fail.counterexample->input).primary == fail.counterexample->actual);
    // Single-threaded run finds the same first counterexample.
    VerifyOptions serial;
    serial.threads = 1;
    const auto again = verify_against(bad, compare_reference(bad), Exhaustive{}, serial);
    CHECK(again.counterexample->trial == fail.counterexample->trial);
    CHECK(again.mismatches == fail.mismatches);
}

TEST_CASE("merge is associative") {
    auto report = [](std::size_t trials, std::size_t bad, std::optional<std::size_t> at) {
        VerificationReport r;
        r.trials = trials;
        r.mismatches = bad;
        if (at) r.counterexample = Counterexample{*at, {}, {}, {}, false};
        return r;
    };
    const auto a = report(10, 1, 7), b = report(5, 0, std::nullopt), c = report(3, 2, 2);
    const auto left = merge(merge(a, b), c);
    const auto right = merge(a, merge(b, c));
    CHECK(left.trials == right.trials);
    CHECK(left.mismatches == right.mismatches);
    CHECK(left.counterexample->trial == 2);
    CHECK(right.counterexample->trial == 2);
}

TEST_CASE("pack/unpack") {
    CHECK(pack_bits(unpack_bits(0xDEADBEEF, 32)) == 0xDEADBEEF);
    CHECK_THROWS_AS(pack_bits(BitVector(65)), Error);
}
