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

#ifndef DISJLOG_LITERAL_HPP
#define DISJLOG_LITERAL_HPP

#include <span>
#include <string>
#include <vector>

#include "disjlog/term.hpp"

namespace disjlog {

/// Built-in predicates are reserved; user programs cannot define them.
/// Comparatives: = <> < > <= >=. Arithmetic: #int #succ + *.
bool is_builtin_predicate(const std::string& name);
bool is_comparative_builtin(const std::string& name);

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    Atom() = default;
    Atom(std::string pred, std::vector<Term> a = {})
        : predicate(std::move(pred)), args(std::move(a)) {}

    size_t arity() const { return args.size(); }
    bool is_builtin() const { return is_builtin_predicate(predicate); }
    bool is_ground() const;

    std::string to_string() const;

    bool operator==(const Atom& other) const {
        return predicate == other.predicate && args == other.args;
    }
    bool operator!=(const Atom& other) const { return !(*this == other); }

    size_t hash() const;
};

/// An atom p or a strongly negated atom -p.
struct ClassicalLiteral {
    Atom atom;
    bool strongly_negated = false;

    ClassicalLiteral() = default;
    ClassicalLiteral(Atom a, bool neg = false) : atom(std::move(a)), strongly_negated(neg) {}

    bool is_ground() const { return atom.is_ground(); }
    std::string to_string() const;

    bool operator==(const ClassicalLiteral& other) const {
        return strongly_negated == other.strongly_negated && atom == other.atom;
    }
    bool operator!=(const ClassicalLiteral& other) const { return !(*this == other); }

    size_t hash() const { return atom.hash() * 2 + (strongly_negated ? 1 : 0); }
};

/// Flips the strong negation sign. Built-in atoms cannot be negated.
ClassicalLiteral complement(const ClassicalLiteral& l);

/// True iff no literal occurs together with its complement.
bool is_consistent(std::span<const ClassicalLiteral> literals);
bool is_consistent(const std::vector<ClassicalLiteral>& literals);

/// A body literal: l or not l.
struct NafLiteral {
    ClassicalLiteral literal;
    bool naf_negated = false;

    NafLiteral() = default;
    NafLiteral(ClassicalLiteral l, bool naf = false)
        : literal(std::move(l)), naf_negated(naf) {}

    bool is_ground() const { return literal.is_ground(); }
    std::string to_string() const;

    bool operator==(const NafLiteral& other) const {
        return naf_negated == other.naf_negated && literal == other.literal;
    }
    bool operator!=(const NafLiteral& other) const { return !(*this == other); }
};

/// Ordering used wherever output has to be deterministic: predicate name,
/// then arity, then sign (positive first), then arguments by the term order.
int compare_literals(const ClassicalLiteral& a, const ClassicalLiteral& b);
inline bool literal_less(const ClassicalLiteral& a, const ClassicalLiteral& b) {
    return compare_literals(a, b) < 0;
}

} // namespace disjlog

template <>
struct std::hash<disjlog::Atom> {
    size_t operator()(const disjlog::Atom& a) const { return a.hash(); }
};

template <>
struct std::hash<disjlog::ClassicalLiteral> {
    size_t operator()(const disjlog::ClassicalLiteral& l) const { return l.hash(); }
};

#endif
