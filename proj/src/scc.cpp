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

#include "disjlog/scc.hpp"

#include <algorithm>

namespace disjlog {

SccResult strongly_connected_components(const std::vector<std::vector<int>>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    SccResult result;
    result.component_of.assign(n, -1);

    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0;
    int raw_count = 0;

    struct Frame {
        int node;
        size_t edge;
    };
    std::vector<Frame> dfs;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1)
            continue;
        dfs.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!dfs.empty()) {
            Frame& f = dfs.back();
            if (f.edge < adjacency[f.node].size()) {
                int w = adjacency[f.node][f.edge++];
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    dfs.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.node] = std::min(lowlink[f.node], index[w]);
                }
            } else {
                int v = f.node;
                dfs.pop_back();
                if (!dfs.empty())
                    lowlink[dfs.back().node] = std::min(lowlink[dfs.back().node], lowlink[v]);
                if (lowlink[v] == index[v]) {
                    // Components complete in reverse topological order.
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        result.component_of[w] = raw_count;
                        if (w == v)
                            break;
                    }
                    ++raw_count;
                }
            }
        }
    }
    result.count = raw_count;
    for (int& c : result.component_of)
        c = raw_count - 1 - c;
    return result;
}

} // namespace disjlog
