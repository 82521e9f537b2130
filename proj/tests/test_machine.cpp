#include <doctest.h>

#include <set>

#include "cagrow/machine.hpp"
#include "cagrow/tm_builder.hpp"
#include "support.hpp"

using namespace cagrow;
using testsup::cfg;

namespace {

TmConfiguration start_on(const TuringMachineSpec& m, const std::string& tape) {
    return tm_start_on(m, cfg(m.alphabet(), tape));
}

}  // namespace

TEST_CASE("builtins compute their functions on standard inputs") {
    struct Case {
        const char* machine;
        const char* in;
        const char* out;
    };
    // successor: f(1)=2 -> S10F; double: f(3)=6 -> S110F (values forced).
    for (const Case& c : {Case{"identity", "S 1 0 1 F", "S 1 0 1 F"},
                          Case{"successor", "S 1 F", "S 1 0 F"},
                          Case{"successor", "S 1 0 1 1 F", "S 1 1 0 0 F"},
                          Case{"double", "S 1 1 F", "S 1 1 0 F"},
                          Case{"const0", "S 1 0 1 F", "S 0 0 0 F"}}) {
        auto m = builtin_machine(c.machine);
        auto res = tm_run(m, start_on(m, c.in), 200);
        CHECK(m.is_halting(res.final.state));
        CHECK(format_configuration(res.final.tape, false) ==
              format_configuration(cfg(m.alphabet(), c.out), false));
    }
}

TEST_CASE("tm_step freezes halting configurations") {
    auto m = builtin_machine("identity");
    auto c = start_on(m, "S 1 F");
    auto h = tm_step(m, c);  // identity halts after one step
    CHECK(m.is_halting(h.state));
    CHECK(tm_step(m, h) == h);
}

TEST_CASE("builtins obey the operating conventions statically") {
    for (const auto& name : builtin_machine_names()) {
        auto rep = check_conventions(builtin_machine(name));
        INFO(name, ": ", rep.to_string());
        CHECK(rep.ok());
    }
}

TEST_CASE("convention clause 1 catches an S reprinted leftward") {
    TmBuilder b(tm_alphabet());
    b.state("q0");
    b.state("halt", true);
    b.initial = "q0";
    b.on("q0", "S", "S", Move::L, "q0");  // moves left without replacing S
    b.fill("q0", Move::R, "halt");
    auto rep = check_conventions(b.build());
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.front().clause == 1);
}

TEST_CASE("convention clause 2 catches an F exited rightward") {
    TmBuilder b(tm_alphabet());
    b.state("q0");
    b.state("halt", true);
    b.initial = "q0";
    b.on("q0", "F", "F", Move::R, "q0");
    b.fill("q0", Move::R, "halt");
    auto rep = check_conventions(b.build());
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.front().clause == 2);
}

TEST_CASE("convention clause 3 catches stray S and F prints") {
    TmBuilder b(tm_alphabet());
    b.state("q0");
    b.state("halt", true);
    b.initial = "q0";
    b.on("q0", "0", "S", Move::R, "halt");
    b.on("q0", "1", "F", Move::L, "halt");
    b.fill("q0", Move::R, "halt");
    auto rep = check_conventions(b.build());
    std::set<int> clauses;
    for (const auto& v : rep.violations) clauses.insert(v.clause);
    CHECK(clauses == std::set<int>{3, 3});
}

TEST_CASE("clause 4 is dynamic: a star print without the overprint step") {
    TmBuilder b(tm_alphabet());
    b.state("q0");
    b.state("halt", true);
    b.initial = "q0";
    b.on("q0", "0", "*", Move::R, "halt");
    b.fill("q0", Move::R, "halt");
    auto m = b.build();
    CHECK(check_conventions(m).ok());  // statically fine
    TmConfiguration c{cfg(m.alphabet(), "S 0 F"), 1, m.initial()};
    auto res = tm_run(m, c, 10);
    REQUIRE_FALSE(res.dynamic_report.ok());
    CHECK(res.dynamic_report.violations.front().clause == 4);
}

TEST_CASE("convention-obeying machines keep configurations standard") {
    for (const auto& name : builtin_machine_names()) {
        auto m = builtin_machine(name);
        std::vector<std::string> inputs = {"S * F", "S 1 0 * 1 F", "S 1 1 1 1 F", "S 0 F"};
        for (const auto& in : inputs) {
            auto res = tm_run(m, start_on(m, in), 10000, true);
            for (const auto& row : res.rows) {
                INFO(name, " on ", in);
                REQUIRE(is_standard_config(row.tape, Layer::sigma));
            }
            CHECK(res.dynamic_report.ok());
        }
    }
}

TEST_CASE("tm_run agrees with an independently coded stepper for 10^4 steps") {
    for (const auto& name : builtin_machine_names()) {
        auto m = builtin_machine(name);
        TmConfiguration c = start_on(m, "S 1 0 1 1 0 1 F");
        testsup::RefTm ref = testsup::RefTm::from(m, c);
        for (int t = 0; t < 10000; ++t) {
            c = tm_step(m, c);
            ref.step(m);
        }
        INFO(name);
        CHECK(ref.matches(m, c));
    }
}

TEST_CASE("machine text format round trips and rejects partial tables") {
    auto m = builtin_machine("successor");
    auto text = format_machine(m);
    auto back = parse_machine(text);
    CHECK(format_machine(back) == text);
    CHECK(back.content_hash() == m.content_hash());

    CHECK_THROWS_AS(parse_machine("alphabet: 0 1 S F * B\n"
                                  "states: a\ninitial: a\nhalting:\n"
                                  "a , 0 -> 1 , R , a\n"),
                    ParseError);
    try {
        parse_machine("alphabet: 0 1 S F * B\nstates: a\ninitial: a\nhalting:\n"
                      "a , 0 -> 1 , R , a\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("(a, S)") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_machine("states: a\ninitial: a\nbogus line\n"), ParseError);
}

TEST_CASE("canonical machine configurations are shift invariant") {
    auto m = builtin_machine("looper");
    TmConfiguration c = start_on(m, "S F");
    TmConfiguration d = c;
    d.tape = shift(d.tape, 5);
    d.head += 5;
    CHECK(tm_canonical(c) == tm_canonical(d));
    CHECK(tm_canonical_hash(c) == tm_canonical_hash(d));
}
