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

#ifndef DISJLOG_ANALYZER_HPP
#define DISJLOG_ANALYZER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "disjlog/rule.hpp"

namespace disjlog {

/// A predicate together with its strong-negation sign: p and -p are
/// distinct nodes of the dependency graph.
struct PredicateRef {
    std::string name;
    size_t arity = 0;
    bool negated = false;

    static PredicateRef of(const ClassicalLiteral& l) {
        return {l.atom.predicate, l.atom.arity(), l.strongly_negated};
    }

    std::string to_string() const {
        return (negated ? "-" : "") + name + "/" + std::to_string(arity);
    }

    bool operator==(const PredicateRef& o) const {
        return negated == o.negated && arity == o.arity && name == o.name;
    }
    bool operator<(const PredicateRef& o) const {
        if (name != o.name) return name < o.name;
        if (arity != o.arity) return arity < o.arity;
        return negated < o.negated;
    }
};

enum class DepEdgeKind { Positive, Negative, HeadSibling };

struct DepEdge {
    int from = 0;
    int to = 0;
    DepEdgeKind kind = DepEdgeKind::Positive;
};

/// Predicate-level dependency graph. Modules are the SCCs over all edge
/// kinds (head siblings count in both directions); positive components are
/// the SCCs of the positive-edge subgraph, used for head-cycle freeness.
/// Component ids are topologically ordered.
struct DependencyGraph {
    std::vector<PredicateRef> nodes;
    std::vector<DepEdge> edges;
    std::vector<int> module_of;
    int module_count = 0;
    std::vector<int> positive_component_of;
    int positive_component_count = 0;

    int node_of(const PredicateRef& p) const {
        auto it = node_index.find(p);
        return it == node_index.end() ? -1 : it->second;
    }

    std::map<PredicateRef, int> node_index;
};

DependencyGraph build_dependency_graph(const Program& p);

struct StratificationResult {
    bool stratified = false;
    /// Witness levels (only meaningful when stratified).
    std::map<PredicateRef, int> levels;
};

/// Predicate-level stratification per the level-mapping conditions: positive
/// dependencies never decrease the level, NAF dependencies strictly
/// increase it, and head siblings share a level. Weak constraint bodies do
/// not contribute dependencies.
StratificationResult is_stratified(const Program& p, const DependencyGraph& g);

struct HcfResult {
    bool hcf = true;
    std::optional<Rule> offending_rule;
};

/// Head-cycle freeness: no rule may have two distinct head literals whose
/// predicates share a positive-edge component.
HcfResult is_hcf(const Program& p, const DependencyGraph& g);

enum class FragmentClass { L1, L2, L3, L4, L5 };

const char* fragment_class_name(FragmentClass c);

struct ClassificationResult {
    FragmentClass fragment = FragmentClass::L1;
    bool has_disjunction = false;
    bool is_hcf = true;
    bool has_naf = false;
    bool is_stratified = true;
    bool has_weak_constraints = false;
    StratificationResult stratification;
};

/// Routes a program to one of the five evaluation classes:
/// L1 no disjunction + stratified (weak constraints allowed);
/// L2 HCF without weak constraints; L3 HCF with weak constraints;
/// L4 non-HCF without weak constraints; L5 non-HCF with weak constraints.
ClassificationResult classify(const Program& p);
ClassificationResult classify(const Program& p, const DependencyGraph& g);

} // namespace disjlog

#endif
