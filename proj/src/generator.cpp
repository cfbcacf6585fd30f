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

#include "disjlog/generator.hpp"

#include <algorithm>

#include "disjlog/scc.hpp"

namespace disjlog {

std::vector<GroundRule> solver_rules(const GroundProgram& g) {
    std::vector<GroundRule> rules;
    rules.reserve(g.rules.size() + g.certain.size());
    for (LitId id : g.certain) {
        GroundRule fact;
        fact.head.push_back(id);
        rules.push_back(std::move(fact));
    }
    rules.insert(rules.end(), g.rules.begin(), g.rules.end());
    return rules;
}

GroundComponents ground_components(const std::vector<GroundRule>& rules, size_t n_literals) {
    std::vector<std::vector<int>> adj(n_literals);
    for (const GroundRule& r : rules)
        for (LitId b : r.body_pos)
            for (LitId h : r.head)
                adj[b].push_back(h);

    SccResult scc = strongly_connected_components(adj);
    GroundComponents out;
    out.component_of = std::move(scc.component_of);
    out.count = scc.count;
    out.atoms_of.resize(out.count);
    for (size_t l = 0; l < n_literals; ++l)
        out.atoms_of[out.component_of[l]].push_back(static_cast<LitId>(l));

    out.trivial.assign(out.count, 1);
    out.hcf.assign(out.count, 1);
    out.rules_of.resize(out.count);
    for (int c = 0; c < out.count; ++c)
        if (out.atoms_of[c].size() > 1)
            out.trivial[c] = 0;
    std::vector<int> heads_in_comp(out.count, 0);
    for (size_t ri = 0; ri < rules.size(); ++ri) {
        const GroundRule& r = rules[ri];
        for (LitId h : r.head) {
            int c = out.component_of[h];
            if (out.rules_of[c].empty() || out.rules_of[c].back() != static_cast<int>(ri))
                out.rules_of[c].push_back(static_cast<int>(ri));
        }
        // A positive self-loop keeps a singleton component non-trivial.
        for (LitId b : r.body_pos)
            for (LitId h : r.head)
                if (b == h)
                    out.trivial[out.component_of[h]] = 0;
        // Two heads in one component break head-cycle freeness.
        for (size_t i = 0; i < r.head.size(); ++i)
            for (size_t j = i + 1; j < r.head.size(); ++j)
                if (out.component_of[r.head[i]] == out.component_of[r.head[j]])
                    out.hcf[out.component_of[r.head[i]]] = 0;
    }
    return out;
}

std::vector<LitId> greatest_unfounded_set(const std::vector<GroundRule>& rules,
                                          const GroundComponents& comps, int component,
                                          const PartialInterpretation& I) {
    if (!comps.hcf[component])
        throw UsageError("greatest unfounded set requested for a non-HCF component");

    std::vector<LitId> atoms = comps.atoms_of[component];
    std::vector<char> in_x(I.size(), 0);
    std::vector<LitId> x;
    for (LitId a : atoms)
        if (!I.is_false(a)) {
            in_x[a] = 1;
            x.push_back(a);
        }

    auto body_not_false = [&](const GroundRule& r) {
        for (LitId b : r.body_pos)
            if (I.is_false(b))
                return false;
        for (LitId n : r.body_naf)
            if (I.is_true(n))
                return false;
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < x.size(); ++i) {
            LitId a = x[i];
            if (!in_x[a])
                continue;
            bool supported = false;
            for (int ri : comps.rules_of[component]) {
                const GroundRule& r = rules[ri];
                if (std::find(r.head.begin(), r.head.end(), a) == r.head.end())
                    continue;
                if (!body_not_false(r))
                    continue;
                bool pos_in_x = false;
                for (LitId b : r.body_pos)
                    if (in_x[b]) {
                        pos_in_x = true;
                        break;
                    }
                if (pos_in_x)
                    continue;
                bool other_true_outside = false;
                for (LitId h : r.head)
                    if (h != a && I.is_true(h) && !in_x[h]) {
                        other_true_outside = true;
                        break;
                    }
                if (other_true_outside)
                    continue;
                supported = true;
                break;
            }
            if (supported) {
                in_x[a] = 0;
                changed = true;
            }
        }
    }
    std::vector<LitId> out;
    for (LitId a : x)
        if (in_x[a])
            out.push_back(a);
    return out;
}

// ---------------------------------------------------------------------------
// ModelGenerator
// ---------------------------------------------------------------------------

ModelGenerator::ModelGenerator(const GroundProgram& g, const GroundComponents& comps)
    : ground_(g), comps_(comps) {
    build();
    init_propagate();
}

void ModelGenerator::build() {
    rules_ = solver_rules(ground_);
    n_ = ground_.index.size();
    occ_body_pos_.assign(n_, {});
    occ_body_naf_.assign(n_, {});
    occ_head_.assign(n_, {});
    static_occ_.assign(n_, 0);
    states_.assign(rules_.size(), RuleState{});
    supports_.assign(n_, 0);
    interp_ = PartialInterpretation(n_);
    comp_dirty_.assign(comps_.count, 0);

    for (size_t ri = 0; ri < rules_.size(); ++ri) {
        const GroundRule& r = rules_[ri];
        for (LitId l : r.body_pos)
            occ_body_pos_[l].push_back(static_cast<int>(ri));
        for (LitId l : r.body_naf)
            occ_body_naf_[l].push_back(static_cast<int>(ri));
        for (LitId l : r.head) {
            occ_head_[l].push_back(static_cast<int>(ri));
            ++supports_[l];
        }
        for (LitId l : r.body_pos)
            ++static_occ_[l];
        for (LitId l : r.body_naf)
            ++static_occ_[l];
        for (LitId l : r.head)
            ++static_occ_[l];
    }
}

void ModelGenerator::init_propagate() {
    // Unsupported atoms and unconditional rules fire immediately; every
    // recursive component needs one initial unfounded-set sweep.
    for (size_t ri = 0; ri < rules_.size(); ++ri)
        recheck(static_cast<int>(ri));
    for (size_t l = 0; l < n_; ++l) {
        int c = comps_.component_of[l];
        if (supports_[l] == 0 && comps_.trivial[c])
            enqueue(static_cast<LitId>(l), Truth::False);
    }
    for (int c = 0; c < comps_.count; ++c) {
        if (!comps_.trivial[c] && comps_.hcf[c] && !comp_dirty_[c]) {
            comp_dirty_[c] = 1;
            dirty_list_.push_back(c);
        }
    }
    propagate_fixpoint();
    root_conflict_ = interp_.in_conflict();
    root_mark_ = interp_.trail_size();
}

void ModelGenerator::reset() {
    undo_to(root_mark_);
    interp_.clear_conflict();
    pending_.clear();
    for (int c : dirty_list_)
        comp_dirty_[c] = 0;
    dirty_list_.clear();
    stack_.clear();
    if (root_conflict_)
        interp_.flag_conflict();
}

void ModelGenerator::enqueue(LitId l, Truth t) {
    pending_.emplace_back(l, t);
}

void ModelGenerator::process_queue() {
    while (!pending_.empty() && !interp_.in_conflict()) {
        auto [l, t] = pending_.back();
        pending_.pop_back();
        Truth cur = interp_.value(l);
        if (cur == t)
            continue;
        if (cur != Truth::Undef) {
            interp_.flag_conflict();
            return;
        }
        interp_.assign(l, t);
        apply(l, t);
    }
}

void ModelGenerator::apply(LitId l, Truth t) {
    if (t == Truth::True) {
        for (int ri : occ_body_pos_[l]) {
            ++states_[ri].body_true;
            recheck(ri);
        }
        for (int ri : occ_body_naf_[l]) {
            ++states_[ri].body_false;
            sync_support(ri);
        }
        for (int ri : occ_head_[l]) {
            ++states_[ri].head_true;
            sync_support(ri);
        }
        LitId comp = ground_.index.complement_of(l);
        if (comp != kNoLit)
            enqueue(comp, Truth::False);
    } else {
        for (int ri : occ_body_pos_[l]) {
            ++states_[ri].body_false;
            sync_support(ri);
        }
        for (int ri : occ_body_naf_[l]) {
            ++states_[ri].body_true;
            recheck(ri);
        }
        for (int ri : occ_head_[l]) {
            ++states_[ri].head_false;
            recheck(ri);
        }
    }
}

void ModelGenerator::unapply(LitId l, Truth t) {
    if (t == Truth::True) {
        for (int ri : occ_body_pos_[l])
            --states_[ri].body_true;
        for (int ri : occ_body_naf_[l]) {
            --states_[ri].body_false;
            sync_support_silent(ri);
        }
        for (int ri : occ_head_[l]) {
            --states_[ri].head_true;
            sync_support_silent(ri);
        }
    } else {
        for (int ri : occ_body_pos_[l]) {
            --states_[ri].body_false;
            sync_support_silent(ri);
        }
        for (int ri : occ_body_naf_[l])
            --states_[ri].body_true;
        for (int ri : occ_head_[l])
            --states_[ri].head_false;
    }
}

// Keeps supports_ in sync with the rule state; fires falsifications.
void ModelGenerator::sync_support(int ri) {
    RuleState& s = states_[ri];
    bool now = s.body_false == 0 && s.head_true == 0;
    if (now == s.supporting)
        return;
    s.supporting = now;
    const int delta = now ? 1 : -1;
    for (LitId h : rules_[ri].head) {
        supports_[h] += delta;
        if (!now && supports_[h] == 0 && interp_.is_undef(h)) {
            int c = comps_.component_of[h];
            if (comps_.trivial[c]) {
                enqueue(h, Truth::False);
            } else if (comps_.hcf[c] && !comp_dirty_[c]) {
                comp_dirty_[c] = 1;
                dirty_list_.push_back(c);
            }
        }
    }
}

// Undo path: restore counts without propagating anything new.
void ModelGenerator::sync_support_silent(int ri) {
    RuleState& s = states_[ri];
    bool now = s.body_false == 0 && s.head_true == 0;
    if (now == s.supporting)
        return;
    s.supporting = now;
    const int delta = now ? 1 : -1;
    for (LitId h : rules_[ri].head)
        supports_[h] += delta;
}

void ModelGenerator::recheck(int ri) {
    const GroundRule& r = rules_[ri];
    RuleState& s = states_[ri];
    const int body_len = static_cast<int>(r.body_pos.size() + r.body_naf.size());
    if (s.body_true != body_len || s.head_true != 0)
        return;
    const int undef_heads = static_cast<int>(r.head.size()) - s.head_false;
    if (undef_heads == 0) {
        interp_.flag_conflict();
        return;
    }
    if (undef_heads == 1) {
        for (LitId h : r.head)
            if (interp_.is_undef(h)) {
                enqueue(h, Truth::True);
                return;
            }
    }
}

void ModelGenerator::propagate_fixpoint() {
    while (true) {
        process_queue();
        if (interp_.in_conflict())
            return;
        if (dirty_list_.empty())
            return;
        int c = dirty_list_.back();
        dirty_list_.pop_back();
        comp_dirty_[c] = 0;
        for (LitId a : greatest_unfounded_set(rules_, comps_, c, interp_)) {
            if (interp_.is_true(a)) {
                interp_.flag_conflict();
                return;
            }
            if (interp_.is_undef(a))
                enqueue(a, Truth::False);
        }
    }
}

void ModelGenerator::undo_to(size_t mark) {
    while (interp_.trail_size() > mark) {
        LitId l = interp_.trail().back();
        Truth t = interp_.value(l);
        interp_.pop();
        unapply(l, t);
    }
}

bool ModelGenerator::next_branch(SearchStats& stats) {
    while (!stack_.empty()) {
        Frame f = stack_.back();
        stack_.pop_back();
        undo_to(f.mark);
        interp_.clear_conflict();
        pending_.clear();
        for (int c : dirty_list_)
            comp_dirty_[c] = 0;
        dirty_list_.clear();
        if (f.phase == 0) {
            ++stats.backtracks;
            stack_.push_back({f.atom, f.mark, 1});
            enqueue(f.atom, Truth::False);
            propagate_fixpoint();
            if (!interp_.in_conflict())
                return true;
        }
    }
    return false;
}

LitId ModelGenerator::choose_literal() const {
    LitId best = kNoLit;
    int best_occ = -1;
    auto consider = [&](LitId a) {
        if (!interp_.is_undef(a))
            return;
        if (static_occ_[a] > best_occ || (static_occ_[a] == best_occ && a < best)) {
            best = a;
            best_occ = static_occ_[a];
        }
    };
    for (size_t ri = 0; ri < rules_.size(); ++ri) {
        const RuleState& s = states_[ri];
        if (s.body_false != 0 || s.head_true != 0)
            continue; // satisfied or inapplicable
        for (LitId h : rules_[ri].head)
            consider(h);
        for (LitId l : rules_[ri].body_naf)
            consider(l);
    }
    return best;
}

void ModelGenerator::bulk_falsify() {
    for (size_t l = 0; l < n_; ++l)
        if (interp_.is_undef(static_cast<LitId>(l)))
            enqueue(static_cast<LitId>(l), Truth::False);
    propagate_fixpoint();
}

void ModelGenerator::enumerate(const Hooks& hooks, SearchStats& stats) {
    if (root_conflict_)
        return;
    while (true) {
        if (interp_.in_conflict()) {
            if (!next_branch(stats))
                return;
            continue;
        }
        if (hooks.prune && hooks.prune()) {
            if (!next_branch(stats))
                return;
            continue;
        }
        if (interp_.total()) {
            ++stats.candidates;
            std::vector<LitId> model = interp_.true_literals();
            if (hooks.on_candidate && !hooks.on_candidate(model))
                return;
            if (!next_branch(stats))
                return;
            continue;
        }
        LitId cand = choose_literal();
        if (cand == kNoLit) {
            // No rule can derive anything new: every remaining undefined
            // atom is false in any answer set extending this state.
            bulk_falsify();
            continue;
        }
        ++stats.choices;
        stack_.push_back({cand, interp_.trail_size(), 0});
        enqueue(cand, Truth::True);
        propagate_fixpoint();
    }
}

const PartialInterpretation& ModelGenerator::propagate_assumptions(
    const std::vector<std::pair<LitId, Truth>>& assumptions) {
    for (auto [l, t] : assumptions) {
        if (interp_.value(l) == t)
            continue;
        if (!interp_.is_undef(l)) {
            interp_.flag_conflict();
            return interp_;
        }
        enqueue(l, t);
    }
    propagate_fixpoint();
    return interp_;
}

PartialInterpretation propagate(const GroundProgram& g,
                                const std::vector<std::pair<LitId, Truth>>& assignments) {
    GroundComponents comps = ground_components(solver_rules(g), g.index.size());
    ModelGenerator gen(g, comps);
    return gen.propagate_assumptions(assignments);
}

void enumerate_candidates(const GroundProgram& g, size_t limit,
                          const std::function<bool(const std::vector<LitId>&)>& cb) {
    GroundComponents comps = ground_components(solver_rules(g), g.index.size());
    ModelGenerator gen(g, comps);
    SearchStats stats;
    size_t seen = 0;
    ModelGenerator::Hooks hooks;
    hooks.on_candidate = [&](const std::vector<LitId>& m) {
        ++seen;
        if (!cb(m))
            return false;
        return limit == 0 || seen < limit;
    };
    gen.enumerate(hooks, stats);
}

} // namespace disjlog
