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

#include <random>

#include "disjlog/oracle.hpp"
#include "disjlog/parser.hpp"
#include "test_helpers.hpp"

using namespace disjlog;

TEST_CASE("disjunctive fact with strong negation") {
    Program p = test::parsed("a v -b v c.");
    REQUIRE(p.rules.size() == 1);
    const Rule& r = p.rules[0];
    CHECK(r.is_fact());
    REQUIRE(r.head.size() == 3);
    CHECK(r.head[0] == ClassicalLiteral(Atom("a")));
    CHECK(r.head[1] == ClassicalLiteral(Atom("b"), true));
    CHECK(r.head[2] == ClassicalLiteral(Atom("c")));

    // '|' is accepted as the same separator.
    CHECK(test::parsed("a | -b | c.") == p);
}

TEST_CASE("weak constraint with weight and level") {
    Program p = test::parsed(":~ b. [1 : 2]");
    REQUIRE(p.weak_constraints.size() == 1);
    const WeakConstraint& wc = p.weak_constraints[0];
    REQUIRE(wc.body.size() == 1);
    CHECK(wc.body[0] == NafLiteral(ClassicalLiteral(Atom("b")), false));
    CHECK(wc.weight == Term::integer(1));
    CHECK(wc.level == Term::integer(2));

    // Omitted parts default to 1.
    CHECK(test::parsed(":~ b.").weak_constraints[0].weight == Term::integer(1));
    CHECK(test::parsed(":~ b.").weak_constraints[0].level == Term::integer(1));
    CHECK(test::parsed(":~ b. [3:]").weak_constraints[0].weight == Term::integer(3));
    CHECK(test::parsed(":~ b. [3:]").weak_constraints[0].level == Term::integer(1));
    CHECK(test::parsed(":~ b. [:2]").weak_constraints[0].weight == Term::integer(1));
    CHECK(test::parsed(":~ b. [:2]").weak_constraints[0].level == Term::integer(2));
    // A variable weight must be bound by the body.
    CHECK_FALSE(parse_program(":~ a, not b. [C:1]").ok());
    CHECK(parse_program(":~ p(C), not b. [C:1]").ok());
}

TEST_CASE("empty input gives an empty program") {
    ParseResult pr = parse_program("");
    CHECK(pr.ok());
    CHECK(pr.program.rules.empty());
    CHECK(pr.program.weak_constraints.empty());
}

TEST_CASE("comments, builtins and maxint placeholders") {
    Program p = test::parsed(
        "% a comment line\n"
        "p(X) :- q(X), X < 3, not r(X). % trailing\n"
        "s(T) :- #int(T), T <> #maxint.\n"
        "u(Y) :- q(X), #succ(X,Y).\n"
        "v(Z) :- q(X), q(Y), +(X,Y,Z).\n");
    CHECK(p.rules.size() == 4);
    CHECK(p.rules[0].body[1].literal.atom.predicate == "<");
    CHECK(p.rules[1].body[1].literal.atom.args[1].kind() == TermKind::Maxint);
    CHECK(p.rules[2].body[1].literal.atom.predicate == "#succ");
    CHECK(p.rules[3].body[2].literal.atom.predicate == "+");
}

TEST_CASE("quoted strings") {
    Program p = test::parsed("name(\"Alice B.\").");
    CHECK(p.rules[0].head[0].atom.args[0] == Term::string("Alice B."));
}

TEST_CASE("errors carry positions inside the input") {
    ParseResult pr = parse_program("a :- b.\nc :- ,.\nd.");
    CHECK_FALSE(pr.ok());
    bool found = false;
    for (const auto& d : pr.diagnostics) {
        if (d.severity != ParseDiagnostic::Severity::Error)
            continue;
        found = true;
        CHECK(d.line >= 1);
        CHECK(d.line <= 3);
        CHECK(d.column >= 1);
    }
    CHECK(found);
    // Recovery continues after the bad statement.
    CHECK(pr.program.rules.size() >= 2);
}

TEST_CASE("parse is total on arbitrary bytes") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::string junk;
        const size_t len = rng() % 64;
        for (size_t i = 0; i < len; ++i)
            junk.push_back(static_cast<char>(rng() % 128));
        ParseResult pr = parse_program(junk); // must not crash
        if (!pr.ok())
            CHECK(!pr.diagnostics.empty());
    }
}

TEST_CASE("safety: every variable needs a positive non-comparative literal") {
    CHECK(check_safety(test::parsed("reachable(X,Y) :- arc(X,Y).").rules[0]).empty());

    Rule unsafe_head = parse_program("p(X) :- q(Y).").program.rules.at(0);
    CHECK(check_safety(unsafe_head) == std::vector<std::string>{"X"});

    // A comparative built-in never binds.
    Rule unsafe_cmp = parse_program("p(X) :- X < 3.").program.rules.at(0);
    CHECK(check_safety(unsafe_cmp) == std::vector<std::string>{"X"});

    // #int counts as binding; NAF literals never do.
    CHECK(check_safety(parse_program("p(X) :- #int(X).").program.rules.at(0)).empty());
    CHECK(!check_safety(parse_program("p(X) :- not q(X).").program.rules.at(0)).empty());

    // Anonymous variables are desugared and checked like the others.
    CHECK(parse_program("p(X) :- q(_, X).").ok());
    CHECK_FALSE(parse_program("p :- not q(_).").ok());
    Rule anon = parse_program("p(X) :- q(_, X).").program.rules.at(0);
    const Term& fresh = anon.body[0].literal.atom.args[0];
    CHECK(fresh.is_variable());
    CHECK(fresh.text() != "_");
}

TEST_CASE("unsafe statements are parse errors") {
    CHECK_FALSE(parse_program("p(X) :- q(Y).").ok());
    CHECK_FALSE(parse_program(":~ p(X), q(Y,Z), r. [W:1]").ok());
}

TEST_CASE("duplicate arity is only a warning") {
    ParseResult pr = parse_program("p(a). p(a,b).");
    CHECK(pr.ok());
    bool warned = false;
    for (const auto& d : pr.diagnostics)
        if (d.severity == ParseDiagnostic::Severity::Warning)
            warned = true;
    CHECK(warned);
}

TEST_CASE("serialization round-trips the worked example program") {
    std::string text =
        "a v b.\n"
        "b v c.\n"
        "d v -d :- a, c.\n"
        ":~ b. [1:2]\n"
        ":~ a, -d. [4:1]\n"
        ":~ c, d. [3:1]\n";
    Program p = test::parsed(text);
    CHECK(p.rules.size() == 3);
    CHECK(p.weak_constraints.size() == 3);
    std::string out = serialize(p);
    CHECK(out == text);
    CHECK(test::parsed(out) == p);

    CHECK(serialize(test::parsed("a.")) == "a.\n");
}

TEST_CASE("round-trip on random programs") {
    for (uint64_t seed = 1; seed <= 150; ++seed) {
        Program p = random_program(seed);
        Program again = test::parsed(serialize(p));
        CHECK(again == p);
    }
}

TEST_CASE("every returned program passes the safety check") {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        Program p = random_program(seed);
        ParseResult pr = parse_program(serialize(p));
        REQUIRE(pr.ok());
        for (const Rule& r : pr.program.rules)
            CHECK(check_safety(r).empty());
        for (const WeakConstraint& wc : pr.program.weak_constraints)
            CHECK(check_safety(wc).empty());
    }
}
