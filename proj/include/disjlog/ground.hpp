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

#ifndef DISJLOG_GROUND_HPP
#define DISJLOG_GROUND_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "disjlog/rule.hpp"

namespace disjlog {

using LitId = int32_t;
constexpr LitId kNoLit = -1;

/// Dense ids for ground classical literals, with complement pairing.
/// Interning a literal also interns its complement, so complement lookups
/// always succeed. The index is built once and then frozen.
class GroundAtomIndex {
public:
    LitId intern(const ClassicalLiteral& l);
    LitId find(const ClassicalLiteral& l) const;
    const ClassicalLiteral& lookup(LitId id) const { return literals_[id]; }
    LitId complement_of(LitId id) const { return complements_[id]; }
    size_t size() const { return literals_.size(); }

private:
    std::vector<ClassicalLiteral> literals_;
    std::vector<LitId> complements_;
    std::unordered_map<ClassicalLiteral, LitId> ids_;
};

/// Where a ground statement came from: index of the source statement plus
/// the substitution applied to it.
struct GroundProvenance {
    int source_index = -1;
    std::vector<std::pair<std::string, Term>> substitution;
};

struct GroundRule {
    std::vector<LitId> head;
    std::vector<LitId> body_pos;
    std::vector<LitId> body_naf;
    GroundProvenance provenance;

    bool is_constraint() const { return head.empty(); }
    bool is_fact() const { return head.size() == 1 && body_pos.empty() && body_naf.empty(); }
};

struct GroundWeakConstraint {
    std::vector<LitId> body_pos;
    std::vector<LitId> body_naf;
    int64_t weight = 1;
    int64_t level = 1;
    GroundProvenance provenance;
};

/// Result of instantiation: atoms already known true (from the evaluation
/// of the deterministic part) plus the residual rules and weak constraints.
/// The answer sets of (certain facts + rules + weak_constraints) are exactly
/// the answer sets of the source program.
struct GroundProgram {
    GroundAtomIndex index;
    std::vector<LitId> certain;
    std::vector<GroundRule> rules;
    std::vector<GroundWeakConstraint> weak_constraints;
    /// Set when the deterministic part is already contradictory (a violated
    /// constraint or a complementary pair of certain atoms).
    bool inconsistent = false;

    /// Literal ids mentioned anywhere (certain, heads, bodies); sorted.
    std::vector<LitId> mentioned_literals() const;
};

/// Text form used by --instantiate: certain atoms as facts first, then
/// rules, then weak constraints, each block deterministically ordered.
std::string to_text(const GroundProgram& g);

/// The residual program as a (ground) Program: certain atoms become facts.
Program to_program(const GroundProgram& g);

} // namespace disjlog

#endif
