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

#ifndef DISJLOG_CHECKER_HPP
#define DISJLOG_CHECKER_HPP

#include "disjlog/generator.hpp"
#include "disjlog/ground.hpp"

namespace disjlog {

/// Gelfond-Lifschitz transform of the residual program (certain atoms
/// included as facts, weak constraints disregarded): rules whose negative
/// body meets X are deleted, the rest lose their negative body.
std::vector<GroundRule> reduct(const GroundProgram& g, const std::vector<LitId>& X);
std::vector<GroundRule> reduct(const std::vector<GroundRule>& rules,
                               const std::vector<LitId>& X, size_t n_literals);

/// Every rule whose body is contained in X has a head atom in X.
/// X must be consistent (UsageError otherwise).
bool is_closed(const std::vector<GroundRule>& positive_rules, const GroundAtomIndex& index,
               const std::vector<LitId>& X);

enum class CheckFailure { None, NotClosed, NotMinimal };

struct CheckResult {
    bool accepted = false;
    CheckFailure reason = CheckFailure::None;
    /// On a minimality failure: a proper consistent subset of X closed
    /// under the reduct.
    std::vector<LitId> witness;
};

struct CheckOptions {
    /// Run the minimality search on every component instead of using the
    /// polynomial unfounded-set path on head-cycle-free ones.
    bool force_general = false;
};

/// Answer-set (stability) test: X must be closed under the reduct and no
/// consistent proper subset may be. Head-cycle-free components go through
/// the unfounded-set check; the remaining components through a search for
/// a removable atom set, which only ever branches inside non-HCF
/// components.
CheckResult is_answer_set(const GroundProgram& g, const std::vector<LitId>& X,
                          const CheckOptions& options = {});
CheckResult is_answer_set(const GroundProgram& g, const GroundComponents& comps,
                          const std::vector<LitId>& X, const CheckOptions& options = {});

} // namespace disjlog

#endif
