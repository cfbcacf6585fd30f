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

#include "disjlog/rule.hpp"

#include <algorithm>

namespace disjlog {

namespace {

std::vector<ClassicalLiteral> body_part(const std::vector<NafLiteral>& body, bool naf) {
    std::vector<ClassicalLiteral> out;
    for (const NafLiteral& l : body)
        if (l.naf_negated == naf)
            out.push_back(l.literal);
    return out;
}

void collect_vars(const std::vector<Term>& args, std::vector<std::string>& out) {
    for (const Term& t : args)
        if (t.is_variable() && std::find(out.begin(), out.end(), t.text()) == out.end())
            out.push_back(t.text());
}

} // namespace

std::vector<ClassicalLiteral> Rule::positive_body() const { return body_part(body, false); }
std::vector<ClassicalLiteral> Rule::negative_body() const { return body_part(body, true); }

bool Rule::is_ground() const {
    for (const ClassicalLiteral& l : head)
        if (!l.is_ground())
            return false;
    for (const NafLiteral& l : body)
        if (!l.is_ground())
            return false;
    return true;
}

std::vector<ClassicalLiteral> WeakConstraint::positive_body() const {
    return body_part(body, false);
}
std::vector<ClassicalLiteral> WeakConstraint::negative_body() const {
    return body_part(body, true);
}

bool WeakConstraint::is_ground() const {
    if (weight.is_variable() || level.is_variable())
        return false;
    for (const NafLiteral& l : body)
        if (!l.is_ground())
            return false;
    return true;
}

bool Program::is_ground() const {
    for (const Rule& r : rules)
        if (!r.is_ground())
            return false;
    for (const WeakConstraint& wc : weak_constraints)
        if (!wc.is_ground())
            return false;
    return true;
}

std::vector<std::string> variables_of(const Rule& r) {
    std::vector<std::string> out;
    for (const ClassicalLiteral& l : r.head)
        collect_vars(l.atom.args, out);
    for (const NafLiteral& l : r.body)
        collect_vars(l.literal.atom.args, out);
    return out;
}

std::vector<std::string> variables_of(const WeakConstraint& wc) {
    std::vector<std::string> out;
    for (const NafLiteral& l : wc.body)
        collect_vars(l.literal.atom.args, out);
    if (wc.weight.is_variable() &&
        std::find(out.begin(), out.end(), wc.weight.text()) == out.end())
        out.push_back(wc.weight.text());
    if (wc.level.is_variable() &&
        std::find(out.begin(), out.end(), wc.level.text()) == out.end())
        out.push_back(wc.level.text());
    return out;
}

} // namespace disjlog
