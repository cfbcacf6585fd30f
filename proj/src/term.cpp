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

#include "disjlog/term.hpp"

#include "disjlog/errors.hpp"

namespace disjlog {

Term Term::integer(int64_t value) {
    if (value < 0)
        throw UsageError("integer constants must be non-negative");
    return Term(TermKind::Integer, std::string(), value);
}

std::string Term::to_string() const {
    switch (kind_) {
    case TermKind::Integer: return std::to_string(value_);
    case TermKind::String: return "\"" + text_ + "\"";
    case TermKind::Maxint: return "#maxint";
    default: return text_;
    }
}

size_t Term::hash() const {
    size_t h = std::hash<std::string>()(text_);
    h ^= std::hash<int64_t>()(value_) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= static_cast<size_t>(kind_) * 0x100000001b3ull;
    return h;
}

namespace {
// Rank used for cross-kind comparison of ground terms.
int kind_rank(TermKind k) {
    switch (k) {
    case TermKind::Integer: return 0;
    case TermKind::Symbol: return 1;
    case TermKind::String: return 2;
    default: return -1;
    }
}
} // namespace

int compare_terms(const Term& a, const Term& b) {
    const int ra = kind_rank(a.kind());
    const int rb = kind_rank(b.kind());
    if (ra < 0 || rb < 0)
        throw UsageError("cannot compare non-ground or unresolved terms");
    if (ra != rb)
        return ra < rb ? -1 : 1;
    if (a.kind() == TermKind::Integer) {
        if (a.value() == b.value()) return 0;
        return a.value() < b.value() ? -1 : 1;
    }
    return a.text().compare(b.text());
}

} // namespace disjlog
