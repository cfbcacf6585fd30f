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

#ifndef DISJLOG_TERM_HPP
#define DISJLOG_TERM_HPP

#include <cstdint>
#include <functional>
#include <string>

namespace disjlog {

enum class TermKind : uint8_t {
    Variable,   ///< starts with an uppercase letter or '_'
    Symbol,     ///< symbolic constant, starts with a lowercase letter
    Integer,    ///< non-negative integer constant
    String,     ///< double-quoted string constant
    Maxint,     ///< #maxint, an integer placeholder resolved when grounding
};

/// A term is a variable or a constant. Anonymous variables are replaced by
/// fresh ordinary variables while parsing, so they never appear here.
class Term {
public:
    Term() : kind_(TermKind::Symbol) {}

    static Term variable(std::string name) { return Term(TermKind::Variable, std::move(name), 0); }
    static Term symbol(std::string name) { return Term(TermKind::Symbol, std::move(name), 0); }
    static Term integer(int64_t value);
    static Term string(std::string text) { return Term(TermKind::String, std::move(text), 0); }
    static Term maxint() { return Term(TermKind::Maxint, std::string(), 0); }

    TermKind kind() const { return kind_; }
    bool is_variable() const { return kind_ == TermKind::Variable; }
    bool is_constant() const { return kind_ != TermKind::Variable; }
    bool is_ground() const { return kind_ != TermKind::Variable; }

    /// Name of a variable/symbol, or the text of a string constant.
    const std::string& text() const { return text_; }
    int64_t value() const { return value_; }

    /// Printable form: quotes around strings, `#maxint` for the placeholder.
    std::string to_string() const;

    bool operator==(const Term& other) const {
        return kind_ == other.kind_ && value_ == other.value_ && text_ == other.text_;
    }
    bool operator!=(const Term& other) const { return !(*this == other); }

    size_t hash() const;

private:
    Term(TermKind kind, std::string text, int64_t value)
        : kind_(kind), text_(std::move(text)), value_(value) {}

    TermKind kind_;
    std::string text_;
    int64_t value_ = 0;
};

/// Total order over ground terms: integers < symbolic constants < strings;
/// integers numerically, symbols lexicographically, strings by code point.
/// #maxint must be resolved before comparing. Returns <0, 0 or >0.
int compare_terms(const Term& a, const Term& b);

inline bool term_less(const Term& a, const Term& b) { return compare_terms(a, b) < 0; }

} // namespace disjlog

template <>
struct std::hash<disjlog::Term> {
    size_t operator()(const disjlog::Term& t) const { return t.hash(); }
};

#endif
