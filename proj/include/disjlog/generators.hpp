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

#ifndef DISJLOG_GENERATORS_HPP
#define DISJLOG_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace disjlog {

/// Whole program deciding whether n < R(k, m): facts for the complete
/// graph on nodes 1..n, the two-coloring guess, one constraint over every
/// ordered k-subset in red and m-subset in blue.
std::string gen_ramsey(int k, int m, int n);

/// An exists/forall 3DNF formula. Variable indices below n_exists are
/// existential, the rest universal; `true` marks a positive occurrence.
struct QbfFormula {
    int n_exists = 0;
    int n_forall = 0;
    std::vector<std::array<std::pair<int, bool>, 3>> disjuncts;
};

/// The fact encoding F_phi: exists/forall per variable and one 6-ary term
/// fact per disjunct with slots (p1,p2,p3,q1,q2,q3) — pi carries a
/// positive occurrence or "true", qi a negated occurrence or "false".
std::string gen_2qbf_facts(const QbfFormula& f);

QbfFormula random_qbf(int n_exists, int n_forall, int n_disjuncts, uint64_t seed);

/// Strategic-companies instance: companies 1..n, 3n products with up to
/// four producers each, ten 4-ary control relations per company.
std::string gen_stratcomp_facts(int n, uint64_t seed);

enum class GraphKind { HamPath, Tsp };

/// node/arc facts plus start(0); Tsp arcs carry costs between 1 and 10.
std::string gen_graph(GraphKind kind, int n, double density, uint64_t seed);

/// Same-generation input: an m-by-m board of persons where each cell is a
/// parent of the one below and the one below-right.
std::string gen_samegen_board(int m);

} // namespace disjlog

#endif
