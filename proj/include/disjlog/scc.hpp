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

#ifndef DISJLOG_SCC_HPP
#define DISJLOG_SCC_HPP

#include <vector>

namespace disjlog {

struct SccResult {
    std::vector<int> component_of; // per node
    int count = 0;                 // components numbered in topological order
};

/// Tarjan over an adjacency list, iterative. Component ids respect edge
/// direction: comp(u) <= comp(v) for every edge u -> v.
SccResult strongly_connected_components(const std::vector<std::vector<int>>& adjacency);

} // namespace disjlog

#endif
