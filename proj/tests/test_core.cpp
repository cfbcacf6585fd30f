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

#include "disjlog/errors.hpp"
#include "disjlog/ground.hpp"
#include "disjlog/literal.hpp"
#include "disjlog/rule.hpp"
#include "test_helpers.hpp"

using namespace disjlog;

TEST_CASE("complement flips the strong negation sign") {
    ClassicalLiteral p(Atom("p", {Term::symbol("a")}));
    CHECK(complement(p) == ClassicalLiteral(Atom("p", {Term::symbol("a")}), true));

    ClassicalLiteral neg_b(Atom("b"), true);
    CHECK(complement(neg_b) == ClassicalLiteral(Atom("b"), false));

    ClassicalLiteral q(Atom("q", {Term::variable("X"), Term::variable("Y")}));
    CHECK(complement(complement(q)) == q);

    ClassicalLiteral builtin(Atom("<", {Term::integer(1), Term::integer(2)}));
    CHECK_THROWS_AS(complement(builtin), UsageError);
}

TEST_CASE("consistency of literal sets") {
    auto lit = [](const char* p, bool neg = false) {
        return ClassicalLiteral(Atom(p), neg);
    };
    CHECK(is_consistent({std::vector<ClassicalLiteral>{lit("a"), lit("b", true), lit("c")}}));
    CHECK(is_consistent(std::vector<ClassicalLiteral>{}));
    std::vector<ClassicalLiteral> bad{
        ClassicalLiteral(Atom("p", {Term::symbol("a")})),
        ClassicalLiteral(Atom("p", {Term::symbol("a")}), true)};
    CHECK_FALSE(is_consistent(bad));
}

TEST_CASE("groundness is a structural check") {
    Program p1 = test::parsed("a v -b v c.");
    CHECK(p1.is_ground());

    Atom arc("arc", {Term::variable("X"), Term::variable("Y")});
    CHECK_FALSE(arc.is_ground());

    Program r = test::parsed("reachable(a,b) :- arc(a,b).");
    CHECK(r.is_ground());

    // Anonymous variables count as variables.
    Program anon = test::parsed("p(X) :- q(X,_).");
    CHECK_FALSE(anon.is_ground());
}

TEST_CASE("total term order: integers < symbols < strings") {
    Term i3 = Term::integer(3);
    Term i10 = Term::integer(10);
    Term sym_b = Term::symbol("b");
    Term str = Term::string("b");
    CHECK(compare_terms(i3, i10) < 0);
    CHECK(compare_terms(i10, i3) > 0);
    CHECK(compare_terms(i3, sym_b) < 0);
    CHECK(compare_terms(sym_b, str) < 0);
    CHECK(compare_terms(sym_b, Term::symbol("b")) == 0);
    CHECK(compare_terms(Term::string("a"), str) < 0);
    CHECK_THROWS_AS(compare_terms(Term::variable("X"), i3), UsageError);
}

TEST_CASE("H, B+ and B- partition the rule body") {
    Program p = test::parsed("a v -b :- c, not d, -e, not -f.");
    const Rule& r = p.rules.at(0);
    CHECK(r.head.size() == 2);
    auto pos = r.positive_body();
    auto neg = r.negative_body();
    CHECK(pos.size() == 2);
    CHECK(neg.size() == 2);
    CHECK(pos.size() + neg.size() == r.body.size());
    CHECK(pos[0] == ClassicalLiteral(Atom("c")));
    CHECK(neg[0] == ClassicalLiteral(Atom("d")));
    CHECK(pos[1] == ClassicalLiteral(Atom("e"), true));
    CHECK(neg[1] == ClassicalLiteral(Atom("f"), true));
}

TEST_CASE("rule kind helpers") {
    Program p = test::parsed("a. a v b :- c. :- d. e :- f.");
    CHECK(p.rules[0].is_fact());
    CHECK(p.rules[1].is_disjunctive());
    CHECK(p.rules[2].is_constraint());
    CHECK(p.rules[3].is_normal());
}

TEST_CASE("ground atom index pairs complements and stays stable") {
    GroundAtomIndex index;
    ClassicalLiteral p(Atom("p", {Term::symbol("a")}));
    LitId id = index.intern(p);
    CHECK(index.lookup(id) == p);
    CHECK(index.intern(p) == id);

    LitId comp = index.complement_of(id);
    REQUIRE(comp != kNoLit);
    CHECK(index.lookup(comp) == complement(p));
    CHECK(index.complement_of(comp) == id);

    // Each distinct ground literal gets exactly one id.
    std::vector<ClassicalLiteral> lits;
    for (int i = 0; i < 20; ++i)
        lits.push_back(ClassicalLiteral(Atom("q", {Term::integer(i)}), i % 2 == 0));
    std::vector<LitId> ids;
    for (const auto& l : lits)
        ids.push_back(index.intern(l));
    for (size_t i = 0; i < lits.size(); ++i) {
        CHECK(index.lookup(ids[i]) == lits[i]);
        CHECK(index.intern(lits[i]) == ids[i]);
    }
    CHECK_THROWS_AS(index.intern(ClassicalLiteral(Atom("r", {Term::variable("X")}))),
                    UsageError);
}
