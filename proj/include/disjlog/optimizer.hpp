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

#ifndef DISJLOG_OPTIMIZER_HPP
#define DISJLOG_OPTIMIZER_HPP

#include <optional>

#include "disjlog/ground.hpp"

namespace disjlog {

/// Total violated weight per priority level. Costs are compared by the
/// per-level vector from the highest level down, which induces the same
/// order as the scalar objective without its arithmetic growth.
struct CostVector {
    std::vector<int64_t> level_weight; // index 0 holds level 1

    int64_t at_level(int64_t level) const {
        return level >= 1 && level <= static_cast<int64_t>(level_weight.size())
                   ? level_weight[level - 1]
                   : 0;
    }
    bool zero() const {
        for (int64_t w : level_weight)
            if (w)
                return false;
        return true;
    }

    /// -1, 0, 1: lexicographic from the highest level down.
    static int compare(const CostVector& a, const CostVector& b);

    bool operator==(const CostVector& o) const { return compare(*this, o) == 0; }
    bool operator<(const CostVector& o) const { return compare(*this, o) < 0; }

    std::string to_string() const;
};

/// Indices of the weak constraints violated by A, grouped by level
/// (index 0 = level 1). A weak constraint is violated when its positive
/// body is contained in A and no NAF body literal is in A.
std::vector<std::vector<int>> violated(const std::vector<GroundWeakConstraint>& wcs,
                                       const std::vector<LitId>& A, size_t n_literals);

CostVector cost(const std::vector<GroundWeakConstraint>& wcs, const std::vector<LitId>& A,
                size_t n_literals);

/// The scalar objective: f(1) = 1, f(n) = f(n-1)*|WC|*w_max + 1,
/// H = sum f(i) * (violated weight at level i). Empty when the value
/// overflows 64 bits.
std::optional<uint64_t> scalar_cost(const std::vector<GroundWeakConstraint>& wcs,
                                    const CostVector& c);

/// Cost of violating everything: the upper bound on any answer set's cost.
CostVector worst_cost(const std::vector<GroundWeakConstraint>& wcs);

} // namespace disjlog

#endif
