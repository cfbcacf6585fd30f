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

#include "disjlog/checker.hpp"

#include <algorithm>
#include <map>

#include "disjlog/errors.hpp"

namespace disjlog {

namespace {

std::vector<char> membership(const std::vector<LitId>& X, size_t n) {
    std::vector<char> in(n, 0);
    for (LitId l : X) {
        if (l < 0 || static_cast<size_t>(l) >= n)
            throw UsageError("literal id out of range");
        in[l] = 1;
    }
    return in;
}

void require_consistent(const GroundAtomIndex& index, const std::vector<LitId>& X,
                        const std::vector<char>& in) {
    for (LitId l : X) {
        LitId c = index.complement_of(l);
        if (c != kNoLit && in[c])
            throw UsageError("inconsistent literal set: " + index.lookup(l).to_string() +
                             " with its complement");
    }
}

// Search for a nonempty removal set D within one component such that
// X \ D stays closed under the reduct. Branches only over the atoms of the
// component; "remove" is tried first so witnesses surface early.
class RemovalSearch {
public:
    RemovalSearch(const std::vector<GroundRule>& reduct_rules, const std::vector<char>& in_x,
                  const std::vector<int>& comp_of, int comp,
                  const std::vector<LitId>& comp_atoms) {
        for (LitId a : comp_atoms)
            if (in_x[a]) {
                local_.emplace(a, static_cast<int>(atoms_.size()));
                atoms_.push_back(a);
            }
        if (atoms_.empty())
            return;
        for (const GroundRule& r : reduct_rules) {
            bool body_in_x = true;
            for (LitId b : r.body_pos)
                if (!in_x[b]) {
                    body_in_x = false;
                    break;
                }
            if (!body_in_x)
                continue;
            Clause c;
            bool always_satisfied = false;
            for (LitId h : r.head) {
                if (!in_x[h])
                    continue;
                if (comp_of[h] != comp) {
                    always_satisfied = true; // that head stays in X \ D
                    break;
                }
                c.keep_heads.push_back(local_.at(h));
            }
            if (always_satisfied)
                continue;
            for (LitId b : r.body_pos)
                if (comp_of[b] == comp && in_x[b])
                    c.remove_bodies.push_back(local_.at(b));
            clauses_.push_back(std::move(c));
        }
    }

    // Returns the removal set as literal ids, empty when none exists.
    std::vector<LitId> run() {
        if (atoms_.empty())
            return {};
        state_.assign(atoms_.size(), Undecided);
        std::vector<LitId> out;
        if (dfs(0, 0))
            for (size_t i = 0; i < atoms_.size(); ++i)
                if (state_[i] == Remove)
                    out.push_back(atoms_[i]);
        return out;
    }

private:
    enum State : char { Undecided, Keep, Remove };

    struct Clause {
        std::vector<int> keep_heads;    // satisfied if one of these is kept
        std::vector<int> remove_bodies; // or one of these is removed
    };

    bool violated(const Clause& c) const {
        for (int h : c.keep_heads)
            if (state_[h] != Remove)
                return false;
        for (int b : c.remove_bodies)
            if (state_[b] == Remove)
                return false;
        // All heads removed and no removable body left open or removed.
        for (int b : c.remove_bodies)
            if (state_[b] == Undecided)
                return false;
        return true;
    }

    bool any_violated() const {
        for (const Clause& c : clauses_)
            if (violated(c))
                return true;
        return false;
    }

    bool dfs(size_t i, int removed) {
        if (any_violated())
            return false;
        if (i == atoms_.size())
            return removed > 0;
        state_[i] = Remove;
        if (dfs(i + 1, removed + 1))
            return true;
        state_[i] = Keep;
        if (dfs(i + 1, removed))
            return true;
        state_[i] = Undecided;
        return false;
    }

    std::vector<LitId> atoms_;
    std::map<LitId, int> local_;
    std::vector<Clause> clauses_;
    std::vector<State> state_;
};

} // namespace

std::vector<GroundRule> reduct(const std::vector<GroundRule>& rules,
                               const std::vector<LitId>& X, size_t n_literals) {
    std::vector<char> in = membership(X, n_literals);
    std::vector<GroundRule> out;
    out.reserve(rules.size());
    for (const GroundRule& r : rules) {
        bool deleted = false;
        for (LitId l : r.body_naf)
            if (in[l]) {
                deleted = true;
                break;
            }
        if (deleted)
            continue;
        GroundRule pr = r;
        pr.body_naf.clear();
        out.push_back(std::move(pr));
    }
    return out;
}

std::vector<GroundRule> reduct(const GroundProgram& g, const std::vector<LitId>& X) {
    return reduct(solver_rules(g), X, g.index.size());
}

bool is_closed(const std::vector<GroundRule>& positive_rules, const GroundAtomIndex& index,
               const std::vector<LitId>& X) {
    std::vector<char> in = membership(X, index.size());
    require_consistent(index, X, in);
    for (const GroundRule& r : positive_rules) {
        bool body_holds = true;
        for (LitId b : r.body_pos)
            if (!in[b]) {
                body_holds = false;
                break;
            }
        for (LitId n : r.body_naf)
            if (in[n]) {
                body_holds = false;
                break;
            }
        if (!body_holds)
            continue;
        bool head_holds = false;
        for (LitId h : r.head)
            if (in[h]) {
                head_holds = true;
                break;
            }
        if (!head_holds)
            return false;
    }
    return true;
}

CheckResult is_answer_set(const GroundProgram& g, const std::vector<LitId>& X,
                          const CheckOptions& options) {
    GroundComponents comps = ground_components(solver_rules(g), g.index.size());
    return is_answer_set(g, comps, X, options);
}

CheckResult is_answer_set(const GroundProgram& g, const GroundComponents& comps,
                          const std::vector<LitId>& X, const CheckOptions& options) {
    const size_t n = g.index.size();
    std::vector<char> in = membership(X, n);
    require_consistent(g.index, X, in);

    std::vector<GroundRule> full = solver_rules(g);
    std::vector<GroundRule> R = reduct(full, X, n);

    CheckResult result;
    if (!is_closed(R, g.index, X)) {
        result.reason = CheckFailure::NotClosed;
        return result;
    }

    // Total interpretation induced by X: members true, the rest false.
    PartialInterpretation total(n);
    for (LitId l : X)
        total.assign(l, Truth::True);
    for (size_t l = 0; l < n; ++l)
        if (!in[l])
            total.assign(static_cast<LitId>(l), Truth::False);

    auto not_minimal = [&](std::vector<LitId> removed) {
        std::vector<char> gone(n, 0);
        for (LitId l : removed)
            gone[l] = 1;
        CheckResult r;
        r.reason = CheckFailure::NotMinimal;
        for (LitId l : X)
            if (!gone[l])
                r.witness.push_back(l);
        return r;
    };

    for (int c = 0; c < comps.count; ++c) {
        if (comps.hcf[c] && !options.force_general) {
            std::vector<LitId> unfounded = greatest_unfounded_set(full, comps, c, total);
            std::vector<LitId> in_model;
            for (LitId a : unfounded)
                if (in[a])
                    in_model.push_back(a);
            if (!in_model.empty())
                return not_minimal(std::move(in_model));
        } else {
            RemovalSearch search(R, in, comps.component_of, c, comps.atoms_of[c]);
            std::vector<LitId> removable = search.run();
            if (!removable.empty())
                return not_minimal(std::move(removable));
        }
    }
    result.accepted = true;
    return result;
}

} // namespace disjlog
