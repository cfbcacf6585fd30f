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

#include "disjlog/analyzer.hpp"
#include "disjlog/oracle.hpp"
#include "test_helpers.hpp"

using namespace disjlog;

namespace {

const char* kP7 =
    "p(a) v p(c) :- not q(a).\n"
    "p(b) :- not q(b).\n";
const char* kP8 =
    "p(a) v p(c) :- not q(b).\n"
    "q(b) :- not p(a).\n";
const char* kP9 =
    "a v b.\n"
    "a :- b.\n";
const char* kP10 =
    "a v b.\n"
    "a :- b.\n"
    "b :- a.\n";

// Checks the witness against the three level-mapping conditions, lifted to
// predicates: positive <=, NAF <, head siblings =.
void check_witness(const Program& p, const StratificationResult& s) {
    REQUIRE(s.stratified);
    auto level = [&](const ClassicalLiteral& l) {
        return s.levels.at(PredicateRef::of(l));
    };
    for (const Rule& r : p.rules) {
        for (const ClassicalLiteral& h : r.head) {
            for (const NafLiteral& b : r.body) {
                if (b.literal.atom.is_builtin())
                    continue;
                if (b.naf_negated)
                    CHECK(level(b.literal) < level(h));
                else
                    CHECK(level(b.literal) <= level(h));
            }
            for (const ClassicalLiteral& h2 : r.head)
                CHECK(level(h) == level(h2));
        }
    }
}

} // namespace

TEST_CASE("dependency graph of P7: q feeds p negatively, two components") {
    Program p = test::parsed(kP7);
    DependencyGraph g = build_dependency_graph(p);
    REQUIRE(g.nodes.size() == 2);
    int pn = g.node_of({"p", 1, false});
    int qn = g.node_of({"q", 1, false});
    REQUIRE(pn >= 0);
    REQUIRE(qn >= 0);
    CHECK(g.module_of[pn] != g.module_of[qn]);
    for (const DepEdge& e : g.edges) {
        CHECK(e.from == qn);
        CHECK(e.to == pn);
        CHECK(e.kind == DepEdgeKind::Negative);
    }
}

TEST_CASE("facts-only program has no edges") {
    DependencyGraph g = build_dependency_graph(test::parsed("a. b(c). -d(e,f)."));
    CHECK(g.edges.empty());
    CHECK(g.nodes.size() == 3);
}

TEST_CASE("2QBF program puts w, t and f into one positive component") {
    Program p = test::parsed(test::corpus_file("2qbf.dl"));
    DependencyGraph g = build_dependency_graph(p);
    int w = g.node_of({"w", 0, false});
    int t = g.node_of({"t", 1, false});
    int f = g.node_of({"f", 1, false});
    REQUIRE(w >= 0);
    REQUIRE(t >= 0);
    REQUIRE(f >= 0);
    CHECK(g.positive_component_of[w] == g.positive_component_of[t]);
    CHECK(g.positive_component_of[w] == g.positive_component_of[f]);
}

TEST_CASE("stratification of the worked examples") {
    Program p7 = test::parsed(kP7);
    StratificationResult s7 = is_stratified(p7, build_dependency_graph(p7));
    check_witness(p7, s7);
    CHECK(s7.levels.at({"q", 1, false}) < s7.levels.at({"p", 1, false}));

    Program p8 = test::parsed(kP8);
    CHECK_FALSE(is_stratified(p8, build_dependency_graph(p8)).stratified);

    Program p10 = test::parsed(kP10);
    StratificationResult s10 = is_stratified(p10, build_dependency_graph(p10));
    check_witness(p10, s10);
}

TEST_CASE("head-cycle freeness of the worked examples") {
    Program p9 = test::parsed(kP9);
    CHECK(is_hcf(p9, build_dependency_graph(p9)).hcf);

    Program p10 = test::parsed(kP10);
    HcfResult h10 = is_hcf(p10, build_dependency_graph(p10));
    CHECK_FALSE(h10.hcf);
    REQUIRE(h10.offending_rule.has_value());
    CHECK(serialize(*h10.offending_rule) == "a v b.");

    // The weighted example program has no positive recursion at all.
    Program pwc = test::parsed(
        "a v b. b v c. d v -d :- a, c.\n"
        ":~ b. [1:2]\n:~ a, -d. [4:1]\n:~ c, d. [3:1]\n");
    CHECK(is_hcf(pwc, build_dependency_graph(pwc)).hcf);
}

TEST_CASE("classification of the corpus programs") {
    CHECK(classify(test::parsed(test::corpus_file("reach.dl"))).fragment ==
          FragmentClass::L1);
    CHECK(classify(test::parsed(test::corpus_file("hampath.dl"))).fragment ==
          FragmentClass::L2);
    CHECK(classify(test::parsed(test::corpus_file("tsp.dl"))).fragment == FragmentClass::L3);
    CHECK(classify(test::parsed(test::corpus_file("2qbf.dl"))).fragment == FragmentClass::L4);
    CHECK(classify(test::parsed(test::corpus_file("preferred_stratcomp.dl"))).fragment ==
          FragmentClass::L5);
    CHECK(classify(test::parsed(test::corpus_file("sokoban.dl"))).fragment ==
          FragmentClass::L2);
}

TEST_CASE("the five classes are exhaustive and deterministic") {
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        Program p = random_program(seed);
        ClassificationResult a = classify(p);
        ClassificationResult b = classify(p);
        CHECK(a.fragment == b.fragment);
        // The flags justify the class.
        switch (a.fragment) {
        case FragmentClass::L1:
            CHECK_FALSE(a.has_disjunction);
            CHECK(a.is_stratified);
            break;
        case FragmentClass::L2:
            CHECK(a.is_hcf);
            CHECK_FALSE(a.has_weak_constraints);
            break;
        case FragmentClass::L3:
            CHECK(a.is_hcf);
            CHECK(a.has_weak_constraints);
            break;
        case FragmentClass::L4:
            CHECK_FALSE(a.is_hcf);
            CHECK_FALSE(a.has_weak_constraints);
            break;
        case FragmentClass::L5:
            CHECK_FALSE(a.is_hcf);
            CHECK(a.has_weak_constraints);
            break;
        }
    }
}

TEST_CASE("deleting rules never breaks stratification or HCF") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        Program p = random_program(seed);
        ClassificationResult before = classify(p);
        if (p.rules.empty())
            continue;
        Program smaller = p;
        smaller.rules.erase(smaller.rules.begin() + static_cast<long>(seed % p.rules.size()));
        ClassificationResult after = classify(smaller);
        if (before.is_stratified)
            CHECK(after.is_stratified);
        if (before.is_hcf)
            CHECK(after.is_hcf);
    }
}

TEST_CASE("stratified witness levels verify on random stratified programs") {
    int seen = 0;
    for (uint64_t seed = 1; seed <= 200 && seen < 30; ++seed) {
        Program p = random_program(seed);
        DependencyGraph g = build_dependency_graph(p);
        StratificationResult s = is_stratified(p, g);
        if (!s.stratified)
            continue;
        ++seen;
        check_witness(p, s);
    }
    CHECK(seen > 0);
}
