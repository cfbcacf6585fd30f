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

#include "disjlog/checker.hpp"
#include "disjlog/errors.hpp"
#include "disjlog/generators.hpp"
#include "disjlog/grounder.hpp"
#include "disjlog/oracle.hpp"
#include "test_helpers.hpp"

using namespace disjlog;

namespace {

const char* kP4 = "a v -b :- c. -b :- not a, not c. a v c :- not -b.";

GroundProgram naive(const std::string& text, int64_t maxint = 0) {
    Program p = test::parsed(text);
    return naive_ground(p, herbrand_universe(p, maxint));
}

LitId lid(GroundProgram& g, const std::string& literal) {
    ParseResult pr = parse_program(literal + ".");
    REQUIRE(pr.ok());
    return g.index.intern(pr.program.rules[0].head[0]);
}

std::vector<LitId> lits(GroundProgram& g, const std::vector<std::string>& names) {
    std::vector<LitId> out;
    for (const std::string& n : names)
        out.push_back(lid(g, n));
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::string> rule_strings(const GroundProgram& g,
                                   const std::vector<GroundRule>& rules) {
    std::set<std::string> out;
    Program p;
    for (const GroundRule& r : rules) {
        Rule rr;
        for (LitId h : r.head)
            rr.head.push_back(g.index.lookup(h));
        for (LitId b : r.body_pos)
            rr.body.emplace_back(g.index.lookup(b), false);
        for (LitId b : r.body_naf)
            rr.body.emplace_back(g.index.lookup(b), true);
        out.insert(serialize(rr));
    }
    return out;
}

} // namespace

TEST_CASE("the reduct of P4 w.r.t. {-b} keeps two rules") {
    GroundProgram g = naive(kP4);
    std::vector<GroundRule> r = reduct(g, lits(g, {"-b"}));
    CHECK(rule_strings(g, r) == std::set<std::string>{"a v -b :- c.", "-b."});
}

TEST_CASE("a positive program is its own reduct") {
    GroundProgram g = naive("a v -b v c. :- a. -b :- c. c :- -b.");
    std::vector<GroundRule> r = reduct(g, lits(g, {"c"}));
    CHECK(rule_strings(g, r) == rule_strings(g, solver_rules(g)));
}

TEST_CASE("P4's reducts w.r.t. {c} and {a} coincide") {
    GroundProgram g = naive(kP4);
    CHECK(rule_strings(g, reduct(g, lits(g, {"c"}))) ==
          rule_strings(g, reduct(g, lits(g, {"a"}))));
}

TEST_CASE("reduct is idempotent on its own output") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Program p = random_program(seed);
        GroundProgram g = naive_ground(p, herbrand_universe(p, 0));
        std::vector<LitId> x = g.mentioned_literals();
        x.resize(x.size() / 2);
        // Drop inconsistent picks.
        std::vector<LitId> consistent_x;
        std::set<LitId> chosen(x.begin(), x.end());
        for (LitId l : x) {
            LitId c = g.index.complement_of(l);
            if (c == kNoLit || !chosen.count(c) || l < c)
                consistent_x.push_back(l);
        }
        std::vector<GroundRule> once = reduct(solver_rules(g), consistent_x, g.index.size());
        std::vector<GroundRule> twice = reduct(once, consistent_x, g.index.size());
        CHECK(rule_strings(g, once) == rule_strings(g, twice));
    }
}

TEST_CASE("closedness check on the worked examples") {
    GroundProgram g = naive(kP4);
    // P4^K with K = {c}: the rule a v -b :- c fires but no head is in K.
    std::vector<GroundRule> rk = reduct(g, lits(g, {"c"}));
    CHECK_FALSE(is_closed(rk, g.index, lits(g, {"c"})));

    GroundProgram empty = naive("");
    CHECK(is_closed(solver_rules(empty), empty.index, {}));

    GroundProgram p5 = naive("a v b.");
    CHECK(is_closed(solver_rules(p5), p5.index, lits(p5, {"a"})));

    std::vector<LitId> bad = lits(g, {"a", "-a"});
    CHECK_THROWS_AS(is_closed(solver_rules(g), g.index, bad), UsageError);
}

TEST_CASE("answer-set checking on P4 and P2") {
    GroundProgram g = naive(kP4);
    CHECK(is_answer_set(g, lits(g, {"-b"})).accepted);
    CHECK(is_answer_set(g, lits(g, {"a"})).accepted);
    CheckResult k = is_answer_set(g, lits(g, {"c"}));
    CHECK_FALSE(k.accepted);
    CHECK(k.reason == CheckFailure::NotClosed);

    GroundProgram p2 = naive("a v -b v c. :- a.");
    CheckResult a = is_answer_set(p2, lits(p2, {"a"}));
    CHECK_FALSE(a.accepted);
    CHECK(a.reason == CheckFailure::NotClosed);
    CHECK(is_answer_set(p2, lits(p2, {"-b"})).accepted);
    CHECK(is_answer_set(p2, lits(p2, {"c"})).accepted);
}

TEST_CASE("minimality failures produce a valid witness") {
    GroundProgram g = naive("a v b. a :- b. b :- a. h :- a.");
    // {a, b, h} is the answer set; {a, h} is not closed, {b} neither.
    CHECK(is_answer_set(g, lits(g, {"a", "b", "h"})).accepted);

    // The saturated 2QBF candidate for an invalid formula is rejected with
    //  a smaller closed set as witness.
    QbfFormula invalid;
    invalid.n_exists = 1;
    invalid.n_forall = 1;
    invalid.disjuncts.push_back({{{0, true}, {1, true}, {1, true}}}); // x and y and y
    GroundProgram q = naive(test::corpus_file("2qbf.dl") + gen_2qbf_facts(invalid));
    std::vector<LitId> saturated =
        lits(q, {"t(true)", "f(false)", "t(x1)", "t(y1)", "f(y1)", "w",
                 "exists(x1)", "forall(y1)", "term(x1,y1,y1,false,false,false)"});
    CheckResult r = is_answer_set(q, saturated);
    CHECK_FALSE(r.accepted);
    CHECK(r.reason == CheckFailure::NotMinimal);
    REQUIRE(!r.witness.empty());
    CHECK(r.witness.size() < saturated.size());
    // Witness is a proper consistent subset closed under the reduct.
    std::vector<GroundRule> red = reduct(q, saturated);
    CHECK(is_closed(red, q.index, r.witness));

    // A valid formula's saturated candidate is stable.
    QbfFormula valid;
    valid.n_exists = 1;
    valid.n_forall = 1;
    valid.disjuncts.push_back({{{0, true}, {1, true}, {1, true}}});   // x and y
    valid.disjuncts.push_back({{{0, true}, {1, false}, {1, false}}}); // x and not y
    GroundProgram qv = naive(test::corpus_file("2qbf.dl") + gen_2qbf_facts(valid));
    std::vector<LitId> sat2 =
        lits(qv, {"t(true)", "f(false)", "t(x1)", "t(y1)", "f(y1)", "w",
                  "exists(x1)", "forall(y1)", "term(x1,y1,y1,false,false,false)",
                  "term(x1,true,true,false,y1,y1)"});
    CHECK(is_answer_set(qv, sat2).accepted);
}

TEST_CASE("accepted sets are closed under the program itself") {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        Program p = random_program(seed);
        GroundProgram g = naive_ground(p, herbrand_universe(p, 0));
        OracleOptions opts;
        opts.optimal_filter = false;
        for (const auto& model : oracle_answer_sets(p, opts)) {
            std::vector<LitId> x;
            for (const ClassicalLiteral& l : model)
                x.push_back(g.index.intern(l));
            std::sort(x.begin(), x.end());
            CHECK(is_answer_set(g, x).accepted);
            // Closed under g itself, not only under the reduct.
            std::vector<GroundRule> full = solver_rules(g);
            std::vector<GroundRule> satisfied;
            for (const GroundRule& r : full) {
                bool naf_blocked = false;
                for (LitId n : r.body_naf)
                    if (std::binary_search(x.begin(), x.end(), n))
                        naf_blocked = true;
                if (!naf_blocked)
                    satisfied.push_back(r);
            }
            CHECK(is_closed(satisfied, g.index, x));
        }
    }
}

TEST_CASE("checker agrees with exhaustive oracle membership") {
    std::mt19937_64 rng(42);
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        Program p = random_program(seed);
        OracleOptions opts;
        opts.optimal_filter = false;
        auto expected = test::model_set(oracle_answer_sets(p, opts));
        GroundProgram g = naive_ground(p, herbrand_universe(p, 0));
        std::vector<LitId> base = g.mentioned_literals();
        for (int trial = 0; trial < 40; ++trial) {
            // Random consistent candidate.
            std::vector<LitId> x;
            for (LitId l : base)
                if (rng() % 2)
                    x.push_back(l);
            std::set<LitId> chosen(x.begin(), x.end());
            std::vector<LitId> consistent_x;
            for (LitId l : x) {
                LitId c = g.index.complement_of(l);
                if (c != kNoLit && chosen.count(c) && c < l)
                    continue;
                consistent_x.push_back(l);
            }
            std::set<std::string> as_strings;
            for (LitId l : consistent_x)
                as_strings.insert(g.index.lookup(l).to_string());
            bool in_oracle = expected.count(as_strings) > 0;
            CheckResult fast = is_answer_set(g, consistent_x);
            CHECK(fast.accepted == in_oracle);
            // The general path agrees wherever both apply.
            CheckOptions force;
            force.force_general = true;
            CHECK(is_answer_set(g, consistent_x, force).accepted == in_oracle);
        }
    }
}
