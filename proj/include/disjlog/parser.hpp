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

#ifndef DISJLOG_PARSER_HPP
#define DISJLOG_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "disjlog/rule.hpp"

namespace disjlog {

struct ParseDiagnostic {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    int line = 1;
    int column = 1;
    std::string message;
    std::string fragment;

    std::string to_string() const;
};

struct ParseResult {
    Program program;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const {
        for (const auto& d : diagnostics)
            if (d.severity == ParseDiagnostic::Severity::Error)
                return false;
        return true;
    }
};

/// Parses program text. Statements end with '.'; disjunction is written
/// `v` or `|`, NAF `not`, strong negation `-`, constraints `:- body.`,
/// weak constraints `:~ body. [w:l]` (weight/level default to 1), comments
/// run from `%` to end of line. Built-ins: infix = <> < > <= >= and
/// #int/#succ/#maxint plus prefix +(X,Y,Z) and *(X,Y,Z).
/// Unsafe statements are reported as errors; the program is only usable
/// when ok() is true.
ParseResult parse_program(std::string_view text);

/// Names of the variables violating safety: each variable must occur in a
/// positive body literal that is not a comparative built-in (#int and the
/// arithmetic predicates bind, comparatives never do).
std::vector<std::string> check_safety(const Rule& r);
std::vector<std::string> check_safety(const WeakConstraint& wc);

/// Canonical text form; reparsing yields a structurally identical program.
std::string serialize(const Program& p);
std::string serialize(const Rule& r);
std::string serialize(const WeakConstraint& wc);

} // namespace disjlog

#endif
