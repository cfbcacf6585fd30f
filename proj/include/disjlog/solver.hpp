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

#ifndef DISJLOG_SOLVER_HPP
#define DISJLOG_SOLVER_HPP

#include <optional>
#include <string>

#include "disjlog/analyzer.hpp"
#include "disjlog/optimizer.hpp"
#include "disjlog/rule.hpp"

namespace disjlog {

struct SolveOptions {
    int64_t maxint = 0;
    size_t max_models = 0; // 0 = all
    /// Filter to optimal answer sets when weak constraints are present.
    bool optimize = true;
    /// Run the generator/checker even where grounding alone would do, and
    /// use the general minimality search everywhere (the L4/L5 route).
    bool force_full_pipeline = false;
    size_t ground_limit = 10'000'000;
};

struct SolveStats {
    uint64_t choices = 0;
    uint64_t backtracks = 0;
    uint64_t checker_calls = 0;
    size_t ground_rules = 0;
    size_t ground_weak_constraints = 0;
    size_t certain_atoms = 0;
};

struct SolveModel {
    std::vector<ClassicalLiteral> literals; // sorted for stable output
    CostVector cost;
};

struct SolveResult {
    std::vector<SolveModel> models;
    bool satisfiable = false;
    bool has_weak_constraints = false;
    CostVector optimal_cost;
    std::optional<uint64_t> optimal_scalar;
    ClassificationResult classification;
    SolveStats stats;
};

/// Full pipeline: classify, instantiate, and—when the residual program is
/// nonempty—generate candidates, check stability, and filter to optimal
/// cost when weak constraints are present.
SolveResult solve(const Program& p, const SolveOptions& opts = {});

struct QueryResult {
    bool holds = false;
    /// Witness answer set (brave true) or counterexample (cautious false).
    std::optional<SolveModel> example;
    SolveStats stats;
};

/// Truth in some (optimal) answer set; the query literal must be ground.
QueryResult brave(const Program& p, const ClassicalLiteral& query,
                  const SolveOptions& opts = {});
/// Truth in all (optimal) answer sets; vacuously true without answer sets.
QueryResult cautious(const Program& p, const ClassicalLiteral& query,
                     const SolveOptions& opts = {});

struct ModelCheckOutcome {
    bool accepted = false;
    std::string detail;
    std::vector<ClassicalLiteral> witness; // smaller closed set, when relevant
};

/// Answer-set checking for a user-supplied model (weak constraints are
/// disregarded). Literals over predicates or constants foreign to the
/// program are rejected with a diagnostic.
ModelCheckOutcome check_model(const Program& p, const std::vector<ClassicalLiteral>& model,
                              const SolveOptions& opts = {});

/// The residual ground program in source syntax (--instantiate).
std::string instantiate_text(const Program& p, const SolveOptions& opts = {});

/// "{a, -b, p(1)}" with literals in canonical order; filter restricts to
/// the listed predicate names (empty = everything).
std::string format_model(const std::vector<ClassicalLiteral>& literals,
                         const std::vector<std::string>& filter = {});

} // namespace disjlog

#endif
