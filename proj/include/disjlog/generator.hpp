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

#ifndef DISJLOG_GENERATOR_HPP
#define DISJLOG_GENERATOR_HPP

#include <functional>
#include <optional>

#include "disjlog/ground.hpp"
#include "disjlog/interpretation.hpp"

namespace disjlog {

/// The rules the solving stages actually run on: the residual rules plus
/// one fact per certain atom.
std::vector<GroundRule> solver_rules(const GroundProgram& g);

/// Positive-dependency components of the ground program (edges from every
/// positive body literal to every head literal of a rule).
struct GroundComponents {
    std::vector<int> component_of; // per literal id
    int count = 0;
    std::vector<char> trivial; // singleton without a positive self-loop
    std::vector<char> hcf;     // no rule has two head atoms in the component
    std::vector<std::vector<LitId>> atoms_of;
    std::vector<std::vector<int>> rules_of; // rules with a head in the component
};

GroundComponents ground_components(const std::vector<GroundRule>& rules, size_t n_literals);

/// Greatest unfounded set of one head-cycle-free component w.r.t. I: the
/// largest set X of not-false component atoms such that every rule with a
/// head in X has a false body, a positive body atom in X, or another true
/// head outside X. Raises UsageError on non-HCF components.
std::vector<LitId> greatest_unfounded_set(const std::vector<GroundRule>& rules,
                                          const GroundComponents& comps, int component,
                                          const PartialInterpretation& I);

struct SearchStats {
    uint64_t choices = 0;
    uint64_t backtracks = 0;
    uint64_t candidates = 0;
};

/// Deterministic consequence engine plus chronological backtracking search.
///
/// Propagation computes the least fixpoint of: forward rule inference (a
/// true body with all but one head false forces the last head; with all
/// heads false it is a conflict), strong-negation consistency, and
/// falsification of greatest unfounded sets on head-cycle-free components.
/// There is no backward propagation.
class ModelGenerator {
public:
    struct Hooks {
        /// Called at every propagated, conflict-free node; return true to
        /// prune the branch (used for optimization bounds).
        std::function<bool()> prune;
        /// Called per total consistent candidate model; return false to
        /// stop the search.
        std::function<bool(const std::vector<LitId>&)> on_candidate;
    };

    ModelGenerator(const GroundProgram& g, const GroundComponents& comps);

    /// Applies the given assignments on top of the root fixpoint and
    /// propagates; the result stays until reset() is called.
    const PartialInterpretation& propagate_assumptions(
        const std::vector<std::pair<LitId, Truth>>& assumptions);

    /// Depth-first enumeration of total conflict-free candidate models that
    /// are closed under the rules; stability is the caller's concern.
    void enumerate(const Hooks& hooks, SearchStats& stats);

    const PartialInterpretation& interpretation() const { return interp_; }

    /// The possibly-true branching literal for the current state: an
    /// undefined atom from the head or NAF body of a rule whose body is not
    /// false and whose head is not yet satisfied. Highest occurrence count
    /// wins, ties broken by lowest id; kNoLit when no candidate exists.
    LitId choose_literal() const;

    void reset();

private:
    struct RuleState {
        int body_true = 0;
        int body_false = 0;
        int head_true = 0;
        int head_false = 0;
        bool supporting = true;
    };

    struct Frame {
        LitId atom;
        size_t mark;
        int phase; // 0: trying true, 1: trying false
    };

    void build();
    void init_propagate();
    void enqueue(LitId l, Truth t);
    void process_queue();
    void apply(LitId l, Truth t);
    void unapply(LitId l, Truth t);
    void sync_support(int rule);
    void sync_support_silent(int rule);
    void recheck(int rule);
    void propagate_fixpoint();
    void undo_to(size_t mark);
    bool next_branch(SearchStats& stats);
    void bulk_falsify();

    const GroundProgram& ground_;
    const GroundComponents& comps_;
    std::vector<GroundRule> rules_;
    size_t n_ = 0;

    std::vector<std::vector<int>> occ_body_pos_, occ_body_naf_, occ_head_;
    std::vector<int> static_occ_;
    std::vector<RuleState> states_;
    std::vector<int> supports_;
    PartialInterpretation interp_;
    std::vector<std::pair<LitId, Truth>> pending_;
    std::vector<char> comp_dirty_;
    std::vector<int> dirty_list_;
    std::vector<Frame> stack_;
    bool root_conflict_ = false;
    size_t root_mark_ = 0;
};

/// One propagation fixpoint from the given assignments (the W_P-style
/// pruning operator). Conflict is reported on the returned interpretation.
PartialInterpretation propagate(const GroundProgram& g,
                                const std::vector<std::pair<LitId, Truth>>& assignments);

/// Candidate stream without stability checking; stops after limit
/// candidates (0 = no limit).
void enumerate_candidates(const GroundProgram& g, size_t limit,
                          const std::function<bool(const std::vector<LitId>&)>& cb);

} // namespace disjlog

#endif
