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

#include "disjlog/solver.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "disjlog/checker.hpp"
#include "disjlog/errors.hpp"
#include "disjlog/generator.hpp"
#include "disjlog/grounder.hpp"

namespace disjlog {

namespace {

struct PreparedProgram {
    GroundProgram ground;
    GroundComponents comps;
    std::unique_ptr<ModelGenerator> generator;
    SolveStats stats;
    bool unsat = false;        // contradictory deterministic part
    bool ig_complete = false;  // no residual rules: certain atoms are the model
};

PreparedProgram prepare(const Program& p, const SolveOptions& opts) {
    PreparedProgram prep;
    HerbrandUniverse u = herbrand_universe(p, opts.maxint);
    GroundingLimits limits{opts.ground_limit};
    prep.ground = intelligent_ground(p, u, limits);
    prep.stats.ground_rules = prep.ground.rules.size();
    prep.stats.ground_weak_constraints = prep.ground.weak_constraints.size();
    prep.stats.certain_atoms = prep.ground.certain.size();
    if (prep.ground.inconsistent) {
        prep.unsat = true;
        return prep;
    }
    if (prep.ground.rules.empty() && !opts.force_full_pipeline) {
        prep.ig_complete = true;
        return prep;
    }
    prep.comps = ground_components(solver_rules(prep.ground), prep.ground.index.size());
    prep.generator = std::make_unique<ModelGenerator>(prep.ground, prep.comps);
    return prep;
}

CostVector decided_cost(const std::vector<GroundWeakConstraint>& wcs,
                        const PartialInterpretation& I, size_t levels) {
    CostVector c;
    c.level_weight.assign(levels, 0);
    for (const GroundWeakConstraint& wc : wcs) {
        bool violated_now = true;
        for (LitId b : wc.body_pos)
            if (!I.is_true(b)) {
                violated_now = false;
                break;
            }
        if (violated_now)
            for (LitId nb : wc.body_naf)
                if (!I.is_false(nb)) {
                    violated_now = false;
                    break;
                }
        if (violated_now)
            c.level_weight[static_cast<size_t>(wc.level - 1)] += wc.weight;
    }
    return c;
}

size_t level_count(const std::vector<GroundWeakConstraint>& wcs) {
    int64_t lmax = 0;
    for (const GroundWeakConstraint& wc : wcs)
        lmax = std::max(lmax, wc.level);
    return static_cast<size_t>(lmax);
}

// Enumerates verified answer sets. `bound` (when it holds a value) prunes
// any branch whose already-decided violation cost exceeds it, and skips
// models costing more; it is re-read on every use so the caller may tighten
// it mid-search. Returns through cb; cb returns false to stop.
void for_each_answer_set(PreparedProgram& prep, const SolveOptions& opts,
                         const std::optional<CostVector>* bound,
                         const std::function<bool(const std::vector<LitId>&,
                                                  const CostVector&)>& cb) {
    const auto& wcs = prep.ground.weak_constraints;
    const size_t levels = level_count(wcs);
    CheckOptions check_opts;
    check_opts.force_general = opts.force_full_pipeline;
    auto over_bound = [bound](const CostVector& c) {
        return bound && bound->has_value() && **bound < c;
    };

    if (prep.ig_complete) {
        std::vector<LitId> model = prep.ground.certain;
        CostVector c = cost(wcs, model, prep.ground.index.size());
        if (!over_bound(c))
            cb(model, c);
        return;
    }

    prep.generator->reset();
    SearchStats search;
    ModelGenerator::Hooks hooks;
    if (bound && !wcs.empty())
        hooks.prune = [&] {
            if (!bound->has_value())
                return false;
            return **bound < decided_cost(wcs, prep.generator->interpretation(), levels);
        };
    hooks.on_candidate = [&](const std::vector<LitId>& candidate) {
        ++prep.stats.checker_calls;
        CheckResult check = is_answer_set(prep.ground, prep.comps, candidate, check_opts);
        if (!check.accepted)
            return true;
        CostVector c = cost(wcs, candidate, prep.ground.index.size());
        if (over_bound(c))
            return true;
        return cb(candidate, c);
    };
    prep.generator->enumerate(hooks, search);
    prep.stats.choices += search.choices;
    prep.stats.backtracks += search.backtracks;
}

// Weak-constraint handling: one pass to find the optimal cost, one pass to
// stream the answer sets attaining it.
std::optional<CostVector> find_optimal_cost(PreparedProgram& prep, const SolveOptions& opts) {
    std::optional<CostVector> incumbent;
    for_each_answer_set(prep, opts, &incumbent,
                        [&](const std::vector<LitId>&, const CostVector& c) {
                            if (!incumbent || c < *incumbent)
                                incumbent = c;
                            return !incumbent->zero(); // zero cost cannot be beaten
                        });
    return incumbent;
}

std::vector<ClassicalLiteral> materialize(const GroundProgram& g,
                                          const std::vector<LitId>& model) {
    std::vector<ClassicalLiteral> out;
    out.reserve(model.size());
    for (LitId l : model)
        out.push_back(g.index.lookup(l));
    std::sort(out.begin(), out.end(), literal_less);
    return out;
}

} // namespace

SolveResult solve(const Program& p, const SolveOptions& opts) {
    SolveResult result;
    result.classification = classify(p);
    result.has_weak_constraints = p.has_weak_constraints();
    PreparedProgram prep = prepare(p, opts);
    if (prep.unsat) {
        result.stats = prep.stats;
        return result;
    }

    const bool optimizing = opts.optimize && !prep.ground.weak_constraints.empty();
    std::optional<CostVector> target;
    if (optimizing) {
        target = find_optimal_cost(prep, opts);
        if (!target) {
            result.stats = prep.stats;
            return result; // no answer sets at all
        }
        result.optimal_cost = *target;
        result.optimal_scalar = scalar_cost(prep.ground.weak_constraints, *target);
    }

    for_each_answer_set(prep, opts, target ? &target : nullptr,
                        [&](const std::vector<LitId>& model, const CostVector& c) {
                            if (target && !(c == *target))
                                return true;
                            result.models.push_back({materialize(prep.ground, model), c});
                            return opts.max_models == 0 ||
                                   result.models.size() < opts.max_models;
                        });
    result.satisfiable = !result.models.empty();
    if (!optimizing && result.satisfiable)
        result.optimal_cost = result.models.front().cost;
    result.stats = prep.stats;
    return result;
}

namespace {

QueryResult query(const Program& p, const ClassicalLiteral& literal, const SolveOptions& opts,
                  bool brave_mode) {
    if (!literal.is_ground())
        throw UsageError("query literal must be ground: " + literal.to_string());
    if (literal.atom.is_builtin())
        throw UsageError("query literal cannot be a built-in");

    QueryResult result;
    PreparedProgram prep = prepare(p, opts);
    if (prep.unsat) {
        result.holds = !brave_mode; // vacuous universal, empty existential
        result.stats = prep.stats;
        return result;
    }
    LitId lid = prep.ground.index.find(literal);

    std::optional<CostVector> target;
    if (opts.optimize && !prep.ground.weak_constraints.empty()) {
        target = find_optimal_cost(prep, opts);
        if (!target) {
            result.holds = !brave_mode;
            result.stats = prep.stats;
            return result;
        }
    }

    std::optional<std::vector<LitId>> example;
    for_each_answer_set(prep, opts, target ? &target : nullptr,
                        [&](const std::vector<LitId>& model, const CostVector& c) {
                            if (target && !(c == *target))
                                return true;
                            bool contains =
                                lid != kNoLit &&
                                std::binary_search(model.begin(), model.end(), lid);
                            if (contains == brave_mode) {
                                example = model;
                                return false;
                            }
                            return true;
                        });
    if (brave_mode)
        result.holds = example.has_value();
    else
        result.holds = !example.has_value(); // includes the vacuous case
    if (example)
        result.example = SolveModel{materialize(prep.ground, *example),
                                    cost(prep.ground.weak_constraints, *example,
                                         prep.ground.index.size())};
    result.stats = prep.stats;
    return result;
}

} // namespace

QueryResult brave(const Program& p, const ClassicalLiteral& literal, const SolveOptions& opts) {
    return query(p, literal, opts, true);
}

QueryResult cautious(const Program& p, const ClassicalLiteral& literal,
                     const SolveOptions& opts) {
    return query(p, literal, opts, false);
}

ModelCheckOutcome check_model(const Program& p, const std::vector<ClassicalLiteral>& model,
                              const SolveOptions& opts) {
    ModelCheckOutcome out;

    // The model must live inside the program's literal base.
    std::set<std::pair<std::string, size_t>> signature;
    auto note = [&](const ClassicalLiteral& l) {
        if (!l.atom.is_builtin())
            signature.insert({l.atom.predicate, l.atom.arity()});
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
    HerbrandUniverse u = herbrand_universe(p, opts.maxint);
    std::set<Term, decltype(&term_less)> universe(u.constants.begin(), u.constants.end(),
                                                  &term_less);
    for (const ClassicalLiteral& l : model) {
        if (!l.is_ground() || l.atom.is_builtin()) {
            out.detail = "model literals must be ground and not built-in: " + l.to_string();
            return out;
        }
        if (!signature.count({l.atom.predicate, l.atom.arity()})) {
            out.detail = "unknown predicate in model: " + l.to_string();
            return out;
        }
        for (const Term& t : l.atom.args)
            if (!universe.count(t)) {
                out.detail = "constant outside the program universe: " + l.to_string();
                return out;
            }
    }
    if (!is_consistent(model)) {
        out.detail = "model is inconsistent";
        return out;
    }

    PreparedProgram prep = prepare(p, SolveOptions{opts.maxint, 0, false, false,
                                                   opts.ground_limit});
    if (prep.unsat) {
        out.detail = "program has no answer sets";
        return out;
    }
    std::vector<LitId> X;
    for (const ClassicalLiteral& l : model)
        X.push_back(prep.ground.index.intern(l));
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());

    // The index may have grown; rebuild the component view.
    GroundComponents comps =
        ground_components(solver_rules(prep.ground), prep.ground.index.size());
    CheckOptions copts;
    CheckResult check = is_answer_set(prep.ground, comps, X, copts);
    out.accepted = check.accepted;
    if (check.accepted) {
        out.detail = "answer set";
    } else if (check.reason == CheckFailure::NotClosed) {
        out.detail = "not closed under the reduct";
    } else {
        out.detail = "not minimal";
        out.witness = materialize(prep.ground, check.witness);
    }
    return out;
}

std::string instantiate_text(const Program& p, const SolveOptions& opts) {
    HerbrandUniverse u = herbrand_universe(p, opts.maxint);
    GroundingLimits limits{opts.ground_limit};
    GroundProgram g = intelligent_ground(p, u, limits);
    return to_text(g);
}

std::string format_model(const std::vector<ClassicalLiteral>& literals,
                         const std::vector<std::string>& filter) {
    std::vector<ClassicalLiteral> shown;
    for (const ClassicalLiteral& l : literals) {
        if (!filter.empty() &&
            std::find(filter.begin(), filter.end(), l.atom.predicate) == filter.end())
            continue;
        shown.push_back(l);
    }
    std::sort(shown.begin(), shown.end(), literal_less);
    std::string out = "{";
    for (size_t i = 0; i < shown.size(); ++i) {
        if (i)
            out += ", ";
        out += shown[i].to_string();
    }
    out += "}";
    return out;
}

} // namespace disjlog
