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

#include "disjlog/analyzer.hpp"

#include <algorithm>

#include "disjlog/scc.hpp"

namespace disjlog {

namespace {

int intern_node(DependencyGraph& g, const PredicateRef& p) {
    auto [it, inserted] = g.node_index.try_emplace(p, static_cast<int>(g.nodes.size()));
    if (inserted)
        g.nodes.push_back(p);
    return it->second;
}

std::vector<int> distinct_head_nodes(const DependencyGraph& g, const Rule& r) {
    std::vector<int> out;
    for (const ClassicalLiteral& l : r.head) {
        int n = g.node_of(PredicateRef::of(l));
        if (n >= 0 && std::find(out.begin(), out.end(), n) == out.end())
            out.push_back(n);
    }
    return out;
}

// True if the rule head contains two distinct literals (H(r) as a set).
bool head_is_disjunctive(const Rule& r) {
    for (size_t i = 0; i < r.head.size(); ++i)
        for (size_t j = i + 1; j < r.head.size(); ++j)
            if (r.head[i] != r.head[j])
                return true;
    return false;
}

} // namespace

DependencyGraph build_dependency_graph(const Program& p) {
    DependencyGraph g;
    // Nodes: every non-built-in signed predicate occurring anywhere.
    auto note = [&](const ClassicalLiteral& l) {
        if (!l.atom.is_builtin())
            intern_node(g, PredicateRef::of(l));
    };
    for (const Rule& r : p.rules) {
        for (const ClassicalLiteral& l : r.head)
            note(l);
        for (const NafLiteral& l : r.body)
            note(l.literal);
    }
    for (const WeakConstraint& wc : p.weak_constraints)
        for (const NafLiteral& l : wc.body)
            note(l.literal);

    // Edges come from Rules(P) only; weak constraints add none.
    for (const Rule& r : p.rules) {
        std::vector<int> heads = distinct_head_nodes(g, r);
        for (const NafLiteral& l : r.body) {
            if (l.literal.atom.is_builtin())
                continue;
            int from = g.node_of(PredicateRef::of(l.literal));
            for (int to : heads)
                g.edges.push_back({from, to,
                                   l.naf_negated ? DepEdgeKind::Negative : DepEdgeKind::Positive});
        }
        for (size_t i = 0; i < heads.size(); ++i)
            for (size_t j = i + 1; j < heads.size(); ++j)
                g.edges.push_back({heads[i], heads[j], DepEdgeKind::HeadSibling});
    }

    const int n = static_cast<int>(g.nodes.size());
    std::vector<std::vector<int>> all_adj(n), pos_adj(n);
    for (const DepEdge& e : g.edges) {
        all_adj[e.from].push_back(e.to);
        if (e.kind == DepEdgeKind::HeadSibling)
            all_adj[e.to].push_back(e.from);
        if (e.kind == DepEdgeKind::Positive)
            pos_adj[e.from].push_back(e.to);
    }
    SccResult modules = strongly_connected_components(all_adj);
    g.module_of = std::move(modules.component_of);
    g.module_count = modules.count;
    SccResult pos = strongly_connected_components(pos_adj);
    g.positive_component_of = std::move(pos.component_of);
    g.positive_component_count = pos.count;
    return g;
}

StratificationResult is_stratified(const Program&, const DependencyGraph& g) {
    StratificationResult result;
    for (const DepEdge& e : g.edges)
        if (e.kind == DepEdgeKind::Negative && g.module_of[e.from] == g.module_of[e.to])
            return result; // negation inside a recursive component

    result.stratified = true;
    std::vector<int> level(g.module_count, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const DepEdge& e : g.edges) {
            int cf = g.module_of[e.from];
            int ct = g.module_of[e.to];
            if (cf == ct)
                continue;
            int need = level[cf] + (e.kind == DepEdgeKind::Negative ? 1 : 0);
            if (level[ct] < need) {
                level[ct] = need;
                changed = true;
            }
        }
    }
    for (size_t i = 0; i < g.nodes.size(); ++i)
        result.levels[g.nodes[i]] = level[g.module_of[i]];
    return result;
}

HcfResult is_hcf(const Program& p, const DependencyGraph& g) {
    for (const Rule& r : p.rules) {
        for (size_t i = 0; i < r.head.size(); ++i) {
            for (size_t j = i + 1; j < r.head.size(); ++j) {
                if (r.head[i] == r.head[j])
                    continue;
                int a = g.node_of(PredicateRef::of(r.head[i]));
                int b = g.node_of(PredicateRef::of(r.head[j]));
                if (g.positive_component_of[a] == g.positive_component_of[b])
                    return {false, r};
            }
        }
    }
    return {true, std::nullopt};
}

const char* fragment_class_name(FragmentClass c) {
    switch (c) {
    case FragmentClass::L1: return "L1";
    case FragmentClass::L2: return "L2";
    case FragmentClass::L3: return "L3";
    case FragmentClass::L4: return "L4";
    default: return "L5";
    }
}

ClassificationResult classify(const Program& p) {
    return classify(p, build_dependency_graph(p));
}

ClassificationResult classify(const Program& p, const DependencyGraph& g) {
    ClassificationResult r;
    for (const Rule& rule : p.rules) {
        if (head_is_disjunctive(rule))
            r.has_disjunction = true;
        for (const NafLiteral& l : rule.body)
            if (l.naf_negated)
                r.has_naf = true;
    }
    r.has_weak_constraints = p.has_weak_constraints();
    r.stratification = is_stratified(p, g);
    r.is_stratified = r.stratification.stratified;
    r.is_hcf = is_hcf(p, g).hcf;

    if (!r.has_disjunction && r.is_stratified)
        r.fragment = FragmentClass::L1;
    else if (r.is_hcf)
        r.fragment = r.has_weak_constraints ? FragmentClass::L3 : FragmentClass::L2;
    else
        r.fragment = r.has_weak_constraints ? FragmentClass::L5 : FragmentClass::L4;
    return r;
}

} // namespace disjlog
