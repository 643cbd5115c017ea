#include <doctest.h>

#include <random>

#include "revcmp/comparator.hpp"
#include "revcmp/decoder.hpp"
#include "revcmp/rnl.hpp"

using namespace revcmp;

namespace {

ErrorKind parse_error_kind(const std::string& text, std::size_t* line = nullptr) {
    try {
        parse_rnl(text);
    } catch (const ParseError& e) {
        if (line) *line = e.line();
        return e.kind();
    }
    return ErrorKind::NoData;
}

}  // namespace

TEST_CASE("minimal inverter file") {
    const Circuit c = parse_rnl("rnl 1\nlines 1\nin 0 a\nnot 0\nout 0 y\nend\n");
    CHECK(simulate(c, BitVector{0}).named.at("y"));
    CHECK_FALSE(simulate(c, BitVector{1}).named.at("y"));
    CHECK(export_rnl(c) == "# rnl\nrnl 1\nlines 1\nin 0 a\ngate NOT 0\nout 0 y\nend\n");
}

TEST_CASE("comments, blank lines and case") {
    const Circuit c = parse_rnl(
        "# header comment\n\nRNL 1\nlines 3  # three\nin 0 a\nin 1 b\nconst 2 0\n"
        "gate tg 0 1 2\nout 2 ab\naux 0 a_copy\nEND\n");
    CHECK(c.gates().size() == 1);
    CHECK(simulate(c, BitVector{1, 1}).named.at("ab"));
    CHECK(c.auxiliary_outputs().size() == 1);
}

TEST_CASE("round trip of generated circuits") {
    for (const Circuit& c : {build_in_cell(), build_chain_cell(), build_final_cell(),
                             build_comparator(1), build_comparator(2), build_comparator(8),
                             build_decoder(2), build_decoder(5)}) {
        CAPTURE(c.name());
        const std::string text = export_rnl(c);
        const Circuit back = parse_rnl(text, c.name());
        CHECK(back == c);
        CHECK(export_rnl(back) == text);
        CHECK(truth_map(back) == truth_map(c));
    }
}

TEST_CASE("round trip of random circuits") {
    std::mt19937_64 rng(3);
    const auto names = library_gate_names();
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t lines = 4 + rng() % 6;
        std::vector<InputRole> roles;
        for (std::size_t i = 0; i < lines; ++i) {
            if (rng() % 3 == 0) {
                roles.push_back(ConstantInput{(rng() & 1u) != 0});
            } else {
                roles.push_back(PrimaryInput{"i" + std::to_string(i)});
            }
        }
        Circuit c("random", roles);
        const std::size_t gates = rng() % 12;
        for (std::size_t g = 0; g < gates; ++g) {
            const auto gate = shared_library_gate(names[rng() % names.size()]);
            std::vector<std::size_t> idx(lines);
            for (std::size_t i = 0; i < lines; ++i) idx[i] = i;
            std::shuffle(idx.begin(), idx.end(), rng);
            idx.resize(gate->width());
            c.add_gate(gate, idx);
        }
        for (std::size_t i = 0; i < lines; ++i) {
            if (rng() % 3 == 0) c.designate_output(i, "o" + std::to_string(i));
            else if (rng() % 5 == 0) c.designate_auxiliary(i, "x" + std::to_string(i));
        }
        const Circuit back = parse_rnl(export_rnl(c), "random");
        CHECK(back == c);
        if (!c.primary_input_lines().empty()) CHECK(truth_map(back) == truth_map(c));
    }
}

TEST_CASE("syntax errors carry line numbers") {
    std::size_t line = 0;
    CHECK(parse_error_kind("rnl 1\nlines 1\nin 0 a\nnot 0\n", &line) == ErrorKind::Syntax);
    CHECK(line >= 4);  // truncated: no 'end'
    CHECK(parse_error_kind("", &line) == ErrorKind::Syntax);
    CHECK(parse_error_kind("rnl 2\nlines 1\nin 0 a\nend\n", &line) == ErrorKind::Syntax);
    CHECK(line == 1);
    CHECK(parse_error_kind("rnl 1\nin 0 a\nend\n", &line) == ErrorKind::Syntax);
    CHECK(line == 2);
    CHECK(parse_error_kind("rnl 1\nlines 2\nin 0 a\nin 5 b\nend\n", &line) == ErrorKind::Syntax);
    CHECK(line == 4);
    CHECK(parse_error_kind("rnl 1\nlines 1\nin 0 a\nfrobnicate 0\nend\n", &line) ==
          ErrorKind::Syntax);
    CHECK(parse_error_kind("rnl 1\nlines 1\nin 0 a\nend\nnot 0\n", &line) == ErrorKind::Syntax);
    CHECK(line == 5);
    CHECK(parse_error_kind("rnl 1\nlines 1\nconst 0 2\nend\n") == ErrorKind::Syntax);
    CHECK(parse_error_kind("rnl 1\nlines x\nend\n") == ErrorKind::Syntax);
}

TEST_CASE("unknown gates and role conflicts") {
    std::size_t line = 0;
    CHECK(parse_error_kind("rnl 1\nlines 2\nin 0 a\nin 1 b\ngate BME 0 1\nend\n", &line) ==
          ErrorKind::UnknownGate);
    CHECK(line == 5);
    CHECK(parse_error_kind("rnl 1\nlines 1\nin 0 a\nconst 0 1\nend\n", &line) ==
          ErrorKind::RoleConflict);
    CHECK(line == 4);
    CHECK(parse_error_kind("rnl 1\nlines 2\nin 0 a\nend\n") == ErrorKind::RoleConflict);
    CHECK(parse_error_kind("rnl 1\nlines 1\nin 0 a\nout 0 y\naux 0 z\nend\n", &line) ==
          ErrorKind::RoleConflict);
    CHECK(line == 5);
    CHECK(parse_error_kind("rnl 1\nlines 2\nin 0 a\nin 1 a\nend\n") == ErrorKind::DuplicateName);
    CHECK(parse_error_kind("rnl 1\nlines 2\nin 0 a\nin 1 b\ngate TG 0 1\nend\n", &line) ==
          ErrorKind::Wiring);
    CHECK(line == 5);
}

TEST_CASE("export refuses gates without a mnemonic") {
    Circuit c("custom", {PrimaryInput{"a"}, PrimaryInput{"b"}});
    c.add_gate(std::make_shared<const ReversibleGate>(gate_from_table("SWAP", 2, {0, 2, 1, 3})),
               {0, 1});
    CHECK_THROWS_AS(export_rnl(c), Error);
}
