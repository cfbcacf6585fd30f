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

#ifndef DISJLOG_ORACLE_HPP
#define DISJLOG_ORACLE_HPP

#include <cstdint>

#include "disjlog/rule.hpp"

namespace disjlog {

struct OracleOptions {
    int64_t maxint = 0;
    /// Refuse programs whose naive grounding mentions more literals; the
    /// oracle has to stay small enough to be obviously correct.
    size_t max_base_literals = 24;
    /// When false, weak constraints are ignored (answer sets of Rules(P)).
    bool optimal_filter = true;
};

/// Definition-level reference solver: naive grounding, enumeration of all
/// consistent subsets of the occurring literals, closedness of the reduct,
/// exhaustive subset minimality, then minimal cost when weak constraints
/// are present. Completely separate from the solving pipeline.
std::vector<std::vector<ClassicalLiteral>> oracle_answer_sets(const Program& p,
                                                              const OracleOptions& opts = {});

struct RandomProgramParams {
    int atoms = 8;
    int max_rules = 12;
    int max_head = 3;
    int max_body = 3;
    double naf_probability = 0.3;
    double strong_neg_probability = 0.1;
    int max_weak_constraints = 3;
};

/// Seeded propositional programs spanning all five evaluation classes;
/// weights and levels are drawn from {1,2,3}.
Program random_program(uint64_t seed, const RandomProgramParams& params = {});

} // namespace disjlog

#endif
