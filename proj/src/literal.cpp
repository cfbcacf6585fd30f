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

#include "disjlog/literal.hpp"

#include <unordered_set>

#include "disjlog/errors.hpp"

namespace disjlog {

bool is_builtin_predicate(const std::string& name) {
    return name == "=" || name == "<>" || name == "<" || name == ">" || name == "<=" ||
           name == ">=" || name == "#int" || name == "#succ" || name == "+" || name == "*";
}

bool is_comparative_builtin(const std::string& name) {
    return name == "=" || name == "<>" || name == "<" || name == ">" || name == "<=" ||
           name == ">=";
}

bool Atom::is_ground() const {
    for (const Term& t : args)
        if (t.is_variable())
            return false;
    return true;
}

std::string Atom::to_string() const {
    if (is_comparative_builtin(predicate) && args.size() == 2)
        return args[0].to_string() + " " + predicate + " " + args[1].to_string();
    std::string out = predicate;
    if (!args.empty()) {
        out += "(";
        for (size_t i = 0; i < args.size(); ++i) {
            if (i) out += ",";
            out += args[i].to_string();
        }
        out += ")";
    }
    return out;
}

size_t Atom::hash() const {
    size_t h = std::hash<std::string>()(predicate);
    for (const Term& t : args)
        h = h * 31 + t.hash();
    return h;
}

std::string ClassicalLiteral::to_string() const {
    return (strongly_negated ? "-" : "") + atom.to_string();
}

ClassicalLiteral complement(const ClassicalLiteral& l) {
    if (l.atom.is_builtin())
        throw UsageError("built-in literal has no complement: " + l.to_string());
    return ClassicalLiteral(l.atom, !l.strongly_negated);
}

bool is_consistent(std::span<const ClassicalLiteral> literals) {
    std::unordered_set<ClassicalLiteral> seen;
    seen.reserve(literals.size());
    for (const ClassicalLiteral& l : literals)
        seen.insert(l);
    for (const ClassicalLiteral& l : literals)
        if (!l.atom.is_builtin() && seen.count(complement(l)))
            return false;
    return true;
}

bool is_consistent(const std::vector<ClassicalLiteral>& literals) {
    return is_consistent(std::span<const ClassicalLiteral>(literals));
}

std::string NafLiteral::to_string() const {
    return (naf_negated ? "not " : "") + literal.to_string();
}

int compare_literals(const ClassicalLiteral& a, const ClassicalLiteral& b) {
    if (int c = a.atom.predicate.compare(b.atom.predicate))
        return c;
    if (a.atom.arity() != b.atom.arity())
        return a.atom.arity() < b.atom.arity() ? -1 : 1;
    if (a.strongly_negated != b.strongly_negated)
        return a.strongly_negated ? 1 : -1;
    for (size_t i = 0; i < a.atom.args.size(); ++i)
        if (int c = compare_terms(a.atom.args[i], b.atom.args[i]))
            return c;
    return 0;
}

} // namespace disjlog
