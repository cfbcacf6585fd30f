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

#include "disjlog/ground.hpp"

#include <algorithm>
#include <set>

#include "disjlog/errors.hpp"
#include "disjlog/parser.hpp"

namespace disjlog {

LitId GroundAtomIndex::intern(const ClassicalLiteral& l) {
    auto it = ids_.find(l);
    if (it != ids_.end())
        return it->second;
    if (!l.is_ground())
        throw UsageError("cannot index non-ground literal " + l.to_string());
    LitId id = static_cast<LitId>(literals_.size());
    literals_.push_back(l);
    complements_.push_back(kNoLit);
    ids_.emplace(l, id);
    if (!l.atom.is_builtin()) {
        LitId comp = intern(complement(l));
        complements_[id] = comp;
        complements_[comp] = id;
    }
    return id;
}

LitId GroundAtomIndex::find(const ClassicalLiteral& l) const {
    auto it = ids_.find(l);
    return it == ids_.end() ? kNoLit : it->second;
}

std::vector<LitId> GroundProgram::mentioned_literals() const {
    std::set<LitId> seen(certain.begin(), certain.end());
    for (const GroundRule& r : rules) {
        seen.insert(r.head.begin(), r.head.end());
        seen.insert(r.body_pos.begin(), r.body_pos.end());
        seen.insert(r.body_naf.begin(), r.body_naf.end());
    }
    for (const GroundWeakConstraint& wc : weak_constraints) {
        seen.insert(wc.body_pos.begin(), wc.body_pos.end());
        seen.insert(wc.body_naf.begin(), wc.body_naf.end());
    }
    return {seen.begin(), seen.end()};
}

namespace {

Rule rule_of(const GroundProgram& g, const GroundRule& r) {
    Rule out;
    for (LitId id : r.head)
        out.head.push_back(g.index.lookup(id));
    for (LitId id : r.body_pos)
        out.body.emplace_back(g.index.lookup(id), false);
    for (LitId id : r.body_naf)
        out.body.emplace_back(g.index.lookup(id), true);
    return out;
}

WeakConstraint wc_of(const GroundProgram& g, const GroundWeakConstraint& wc) {
    WeakConstraint out;
    for (LitId id : wc.body_pos)
        out.body.emplace_back(g.index.lookup(id), false);
    for (LitId id : wc.body_naf)
        out.body.emplace_back(g.index.lookup(id), true);
    out.weight = Term::integer(wc.weight);
    out.level = Term::integer(wc.level);
    return out;
}

} // namespace

Program to_program(const GroundProgram& g) {
    Program p;
    std::vector<ClassicalLiteral> facts;
    for (LitId id : g.certain)
        facts.push_back(g.index.lookup(id));
    std::sort(facts.begin(), facts.end(), literal_less);
    for (ClassicalLiteral& f : facts)
        p.rules.push_back(Rule({std::move(f)}, {}));
    for (const GroundRule& r : g.rules)
        p.rules.push_back(rule_of(g, r));
    for (const GroundWeakConstraint& wc : g.weak_constraints)
        p.weak_constraints.push_back(wc_of(g, wc));
    return p;
}

std::string to_text(const GroundProgram& g) {
    std::vector<std::string> facts, rules, wcs;
    for (LitId id : g.certain)
        facts.push_back(g.index.lookup(id).to_string() + ".");
    for (const GroundRule& r : g.rules)
        rules.push_back(serialize(rule_of(g, r)));
    for (const GroundWeakConstraint& wc : g.weak_constraints)
        wcs.push_back(serialize(wc_of(g, wc)));
    std::sort(facts.begin(), facts.end());
    std::sort(rules.begin(), rules.end());
    std::sort(wcs.begin(), wcs.end());
    std::string out;
    for (const auto& block : {facts, rules, wcs})
        for (const std::string& line : block)
            out += line + "\n";
    return out;
}

} // namespace disjlog
