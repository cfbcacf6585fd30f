/*
 *  Copyright (C) 2026  The disjlog authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "disjlog/errors.hpp"
#include "disjlog/grounder.hpp"
#include "disjlog/oracle.hpp"
#include "disjlog/parser.hpp"
#include "test_helpers.hpp"

using namespace disjlog;

namespace {

std::set<std::string> certain_strings(const GroundProgram& g) {
    std::set<std::string> out;
    for (LitId id : g.certain)
        out.insert(g.index.lookup(id).to_string());
    return out;
}

std::set<std::string> universe_strings(const HerbrandUniverse& u) {
    std::set<std::string> out;
    for (const Term& t : u.constants)
        out.insert(t.to_string());
    return out;
}

// Answer sets straight from a ground program by definition-level
// enumeration; small inputs only. Used to compare groundings.
std::set<std::set<std::string>> answer_sets_of_ground(const GroundProgram& g) {
    Program p = to_program(g);
    OracleOptions opts;
    return test::model_set(oracle_answer_sets(p, opts));
}

} // namespace

TEST_CASE("herbrand universe: constants, psi fallback, integer range") {
    CHECK(universe_strings(herbrand_universe(test::parsed("a v -b v c."), 0)) ==
          std::set<std::string>{"psi"});

    CHECK(universe_strings(herbrand_universe(test::parsed("arc(a,b)."), 0)) ==
          std::set<std::string>{"a", "b"});

    HerbrandUniverse soko =
        herbrand_universe(test::parsed(test::corpus_file("sokoban.dl") +
                                       "right(l1,l2). top(l2,l0). sokoban(l1,0). box(l2,0). "
                                       "solution(l0)."),
                          6);
    std::set<std::string> got = universe_strings(soko);
    for (const char* c : {"l0", "l1", "l2", "0", "1", "2", "3", "4", "5", "6", "right",
                          "left", "up", "down"})
        CHECK(got.count(c));
    CHECK(soko.has_integer_range);
    CHECK_FALSE(soko.added_psi);

    CHECK_THROWS_AS(herbrand_universe(test::parsed("a."), -1), UsageError);
}

TEST_CASE("naive grounding of a propositional program is the program itself") {
    Program p = test::parsed("a v -b v c. :- a. -b :- c. c :- -b.");
    GroundProgram g = naive_ground(p, herbrand_universe(p, 0));
    CHECK(g.rules.size() == 4);
    CHECK(g.certain.empty());
}

TEST_CASE("naive grounding substitutes the whole universe") {
    Program p = test::parsed("reach(X,Y) :- arc(X,Y). arc(a,b).");
    GroundProgram g = naive_ground(p, herbrand_universe(p, 0));
    // 2^2 instances of the rule plus the fact.
    CHECK(g.rules.size() == 5);
}

TEST_CASE("a rule with an always-false builtin leaves no instances") {
    Program p = test::parsed("p(X) :- q(X), X < X. q(a).");
    GroundProgram g = naive_ground(p, herbrand_universe(p, 0));
    CHECK(g.rules.size() == 1); // just the fact
}

TEST_CASE("naive grounding guards against explosion") {
    Program p = test::parsed(
        "p(A,B,C,D,E,F,G,H) :- q(A), q(B), q(C), q(D), q(E), q(F), q(G), q(H).\n"
        "q(c1). q(c2). q(c3). q(c4). q(c5). q(c6). q(c7). q(c8). q(c9). q(c10).\n");
    GroundingLimits limits;
    limits.max_ground_rules = 10'000;
    CHECK_THROWS_AS(naive_ground(p, herbrand_universe(p, 0), limits), ResourceLimitError);
}

TEST_CASE("intelligent grounding fully evaluates REACH") {
    Program p = test::parsed(test::corpus_file("reach.dl") + "arc(a,b). arc(b,c).");
    GroundProgram g = intelligent_ground(p, herbrand_universe(p, 0));
    CHECK(g.rules.empty());
    CHECK_FALSE(g.inconsistent);
    CHECK(certain_strings(g) ==
          std::set<std::string>{"arc(a,b)", "arc(b,c)", "reachable(a,b)", "reachable(b,c)",
                                "reachable(a,c)"});
}

TEST_CASE("stratified normal programs leave no residual rules") {
    Program p = test::parsed(
        "q(a). q(b). r(b).\n"
        "p(X) :- q(X), not r(X).\n"
        "s(X) :- p(X).\n");
    GroundProgram g = intelligent_ground(p, herbrand_universe(p, 0));
    CHECK(g.rules.empty());
    CHECK(certain_strings(g) ==
          std::set<std::string>{"q(a)", "q(b)", "r(b)", "p(a)", "s(a)"});
}

TEST_CASE("violated certain constraint flags inconsistency") {
    Program p = test::parsed("p. :- p.");
    GroundProgram g = intelligent_ground(p, herbrand_universe(p, 0));
    CHECK(g.inconsistent);

    Program q = test::parsed("p. -p.");
    CHECK(intelligent_ground(q, herbrand_universe(q, 0)).inconsistent);
}

TEST_CASE("guessing rules instantiate only over derivable atoms") {
    Program p = test::parsed(test::corpus_file("hampath.dl") +
                             "node(a). node(b). arc(a,b). start(a).");
    GroundProgram g = intelligent_ground(p, herbrand_universe(p, 0));
    // One guess instance for the start arc; nothing over (b,a).
    bool found_guess = false;
    for (const GroundRule& r : g.rules) {
        if (r.head.size() == 2)
            found_guess = true;
        for (LitId h : r.head) {
            std::string s = g.index.lookup(h).to_string();
            CHECK(s != "inPath(b,a)");
            CHECK(s != "outPath(b,a)");
        }
    }
    CHECK(found_guess);
    CHECK(answer_sets_of_ground(g) == test::model_set(oracle_answer_sets(p)));
}

TEST_CASE("equivalence of intelligent and naive grounding on random programs") {
    for (uint64_t seed = 1; seed <= 120; ++seed) {
        Program p = random_program(seed);
        HerbrandUniverse u = herbrand_universe(p, 0);
        GroundProgram smart = intelligent_ground(p, u);
        if (smart.inconsistent) {
            CHECK(oracle_answer_sets(p).empty());
            continue;
        }
        CAPTURE(seed);
        CHECK(answer_sets_of_ground(smart) == test::model_set(oracle_answer_sets(p)));
    }
}

TEST_CASE("emitted rules are simplifications of naive instances") {
    Program p = test::parsed(test::corpus_file("hampath.dl") +
                             "node(a). node(b). arc(a,b). arc(b,a). start(a).");
    HerbrandUniverse u = herbrand_universe(p, 0);
    GroundProgram smart = intelligent_ground(p, u);
    for (const GroundRule& r : smart.rules) {
        REQUIRE(r.provenance.source_index >= 0);
        const Rule& src = p.rules[static_cast<size_t>(r.provenance.source_index)];
        // Apply the recorded substitution to the source rule.
        auto substituted = [&](const Atom& a) {
            Atom out = a;
            for (Term& t : out.args) {
                if (!t.is_variable())
                    continue;
                for (const auto& [var, value] : r.provenance.substitution)
                    if (var == t.text()) {
                        t = value;
                        break;
                    }
            }
            return out;
        };
        std::set<std::string> head_instance, body_instance;
        for (const ClassicalLiteral& h : src.head)
            head_instance.insert(
                ClassicalLiteral(substituted(h.atom), h.strongly_negated).to_string());
        for (const NafLiteral& b : src.body)
            body_instance.insert(
                ClassicalLiteral(substituted(b.literal.atom), b.literal.strongly_negated)
                    .to_string());
        for (LitId h : r.head)
            CHECK(head_instance.count(smart.index.lookup(h).to_string()));
        for (LitId b : r.body_pos)
            CHECK(body_instance.count(smart.index.lookup(b).to_string()));
        for (LitId b : r.body_naf)
            CHECK(body_instance.count(smart.index.lookup(b).to_string()));
    }
}

TEST_CASE("grounding output is deterministic") {
    Program p = test::parsed(test::corpus_file("hampath.dl") +
                             "node(a). node(b). node(c). arc(a,b). arc(b,c). arc(c,a). "
                             "start(a).");
    HerbrandUniverse u = herbrand_universe(p, 0);
    std::string first = to_text(intelligent_ground(p, u));
    std::string second = to_text(intelligent_ground(p, u));
    CHECK(first == second);
    CHECK(!first.empty());
}

TEST_CASE("builtin evaluation: #succ") {
    BuiltinResult r = eval_builtin(Atom("#succ", {Term::integer(2), Term::variable("Y")}), 6);
    REQUIRE_FALSE(r.is_test);
    REQUIRE(r.bindings.size() == 1);
    CHECK(r.bindings[0] ==
          std::vector<std::pair<std::string, Term>>{{"Y", Term::integer(3)}});

    // The boundary case the Appendix guards with T <> #maxint.
    BuiltinResult top = eval_builtin(Atom("#succ", {Term::integer(6), Term::variable("Y")}), 6);
    CHECK(top.bindings.empty());

    BuiltinResult back =
        eval_builtin(Atom("#succ", {Term::variable("X"), Term::integer(4)}), 6);
    REQUIRE(back.bindings.size() == 1);
    CHECK(back.bindings[0][0].second == Term::integer(3));

    CHECK_THROWS_AS(
        eval_builtin(Atom("#succ", {Term::variable("X"), Term::variable("Y")}), 6),
        GroundingError);
}

TEST_CASE("builtin evaluation: comparisons use the total term order") {
    BuiltinResult r = eval_builtin(Atom("<", {Term::integer(3), Term::symbol("b")}), 0);
    REQUIRE(r.is_test);
    CHECK(r.truth);
    CHECK(eval_builtin(Atom("=", {Term::integer(3), Term::symbol("b")}), 0).truth == false);
    CHECK(eval_builtin(Atom("<>", {Term::symbol("a"), Term::string("a")}), 0).truth);
    CHECK_THROWS_AS(eval_builtin(Atom("<", {Term::variable("X"), Term::integer(1)}), 0),
                    GroundingError);
}

TEST_CASE("builtin evaluation: #int and arithmetic") {
    BuiltinResult ints = eval_builtin(Atom("#int", {Term::variable("X")}), 3);
    CHECK(ints.bindings.size() == 4); // 0..3
    CHECK(eval_builtin(Atom("#int", {Term::integer(2)}), 3).truth);
    CHECK_FALSE(eval_builtin(Atom("#int", {Term::integer(9)}), 3).truth);

    BuiltinResult plus =
        eval_builtin(Atom("+", {Term::integer(2), Term::integer(3), Term::variable("Z")}), 10);
    REQUIRE(plus.bindings.size() == 1);
    CHECK(plus.bindings[0][0].second == Term::integer(5));
    // Overflow past maxint fails.
    CHECK(eval_builtin(Atom("+", {Term::integer(7), Term::integer(7), Term::variable("Z")}),
                       10)
              .bindings.empty());
    BuiltinResult times = eval_builtin(
        Atom("*", {Term::integer(2), Term::integer(3), Term::integer(6)}), 10);
    CHECK(times.truth);
}

TEST_CASE("maxint placeholder resolves to the configured value") {
    Program p = test::parsed("bound(X) :- #int(X), X = #maxint.");
    GroundProgram g = intelligent_ground(p, herbrand_universe(p, 4));
    CHECK(certain_strings(g) == std::set<std::string>{"bound(4)"});
}

TEST_CASE("integer range is materialized lazily") {
    // Integer constants pull 0..maxint into the universe, but instantiation
    // only ever joins derivable atoms, so a large maxint stays cheap.
    Program p = test::parsed("p(X) :- q(X). q(a). q(5). :- p(X), r(X). r(b).");
    GroundProgram g = intelligent_ground(p, herbrand_universe(p, 100000));
    CHECK(g.rules.empty());
    CHECK(certain_strings(g) ==
          std::set<std::string>{"q(a)", "q(5)", "p(a)", "p(5)", "r(b)"});
}
