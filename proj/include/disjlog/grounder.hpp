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

#ifndef DISJLOG_GROUNDER_HPP
#define DISJLOG_GROUNDER_HPP

#include <cstdint>
#include <optional>

#include "disjlog/ground.hpp"
#include "disjlog/rule.hpp"

namespace disjlog {

/// The constants of a program: whatever appears in it, plus 0..maxint when
/// integers or integer built-ins occur, plus the fallback constant psi when
/// the set would otherwise be empty.
struct HerbrandUniverse {
    std::vector<Term> constants; // sorted by the term order, no duplicates
    int64_t maxint = 0;
    bool has_integer_range = false;
    bool added_psi = false;
};

HerbrandUniverse herbrand_universe(const Program& p, int64_t maxint);

struct GroundingLimits {
    size_t max_ground_rules = 10'000'000;
};

/// Textbook Ground(P): every substitution over the universe, built-in
/// literals evaluated and removed (instances with false built-ins dropped),
/// and nothing else. Facts stay rules; `certain` stays empty.
GroundProgram naive_ground(const Program& p, const HerbrandUniverse& u,
                           const GroundingLimits& limits = {});

/// Instantiation that evaluates the deterministic part of the program:
/// predicate modules are processed in topological order with semi-naive
/// iteration, rules are instantiated only over derivable atoms, stratified
/// NAF over fully evaluated modules is resolved, and heads of normal rules
/// with certain bodies become certain atoms instead of rules. The residual
/// program plus the certain atoms has exactly the answer sets of
/// naive_ground(p, u).
GroundProgram intelligent_ground(const Program& p, const HerbrandUniverse& u,
                                 const GroundingLimits& limits = {});

/// Result of evaluating a built-in atom: either a truth value (all
/// arguments bound) or the substitutions that make it true.
struct BuiltinResult {
    bool is_test = true;
    bool truth = false;
    /// One entry per solution; pairs are (variable name, value).
    std::vector<std::vector<std::pair<std::string, Term>>> bindings;
};

/// Evaluates a built-in atom under the given maxint. Comparisons use the
/// total term order and require both arguments bound; #int enumerates or
/// tests 0..maxint; #succ binds either argument from the other; + and *
/// bind their result from two bound integer arguments and fail past
/// maxint. Unsupported binding patterns raise GroundingError.
BuiltinResult eval_builtin(const Atom& atom, int64_t maxint);

} // namespace disjlog

#endif
