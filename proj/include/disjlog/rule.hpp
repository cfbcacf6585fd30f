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

#ifndef DISJLOG_RULE_HPP
#define DISJLOG_RULE_HPP

#include <vector>

#include "disjlog/literal.hpp"

namespace disjlog {

/// a1 v ... v an :- b1, ..., bk, not bk+1, ..., not bm.
/// n = 0 is an integrity constraint, n = 1 a normal rule,
/// an empty body with a nonempty head a fact.
struct Rule {
    std::vector<ClassicalLiteral> head;
    std::vector<NafLiteral> body;

    Rule() = default;
    Rule(std::vector<ClassicalLiteral> h, std::vector<NafLiteral> b)
        : head(std::move(h)), body(std::move(b)) {}

    bool is_constraint() const { return head.empty(); }
    bool is_normal() const { return head.size() == 1; }
    bool is_disjunctive() const { return head.size() > 1; }
    bool is_fact() const { return !head.empty() && body.empty(); }

    /// B+(r): the classical literals occurring without `not`.
    std::vector<ClassicalLiteral> positive_body() const;
    /// B-(r): the classical literals occurring under `not`.
    std::vector<ClassicalLiteral> negative_body() const;

    bool is_ground() const;

    bool operator==(const Rule& other) const {
        return head == other.head && body == other.body;
    }
    bool operator!=(const Rule& other) const { return !(*this == other); }
};

/// :~ b1, ..., not bm. [w : l] — weight and level default to 1 and must
/// ground to positive integers.
struct WeakConstraint {
    std::vector<NafLiteral> body;
    Term weight = Term::integer(1);
    Term level = Term::integer(1);

    WeakConstraint() = default;
    WeakConstraint(std::vector<NafLiteral> b, Term w, Term l)
        : body(std::move(b)), weight(std::move(w)), level(std::move(l)) {}

    std::vector<ClassicalLiteral> positive_body() const;
    std::vector<ClassicalLiteral> negative_body() const;

    bool is_ground() const;

    bool operator==(const WeakConstraint& other) const {
        return body == other.body && weight == other.weight && level == other.level;
    }
    bool operator!=(const WeakConstraint& other) const { return !(*this == other); }
};

/// Rules(P) and WC(P); the two collections are disjoint by construction.
struct Program {
    std::vector<Rule> rules;
    std::vector<WeakConstraint> weak_constraints;

    bool has_weak_constraints() const { return !weak_constraints.empty(); }
    bool is_ground() const;

    bool operator==(const Program& other) const {
        return rules == other.rules && weak_constraints == other.weak_constraints;
    }
    bool operator!=(const Program& other) const { return !(*this == other); }
};

/// Collects the variable names occurring anywhere in the statement.
std::vector<std::string> variables_of(const Rule& r);
std::vector<std::string> variables_of(const WeakConstraint& wc);

} // namespace disjlog

#endif
