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

#ifndef DISJLOG_INTERPRETATION_HPP
#define DISJLOG_INTERPRETATION_HPP

#include <algorithm>
#include <vector>

#include "disjlog/errors.hpp"
#include "disjlog/ground.hpp"

namespace disjlog {

enum class Truth : uint8_t { Undef, True, False };

/// Three-valued assignment over ground literal ids with an assignment trail.
/// Assignments are undone by popping the trail; replaying the trail
/// reproduces the assignment.
class PartialInterpretation {
public:
    PartialInterpretation() = default;
    explicit PartialInterpretation(size_t n_literals) : status_(n_literals, Truth::Undef) {}

    size_t size() const { return status_.size(); }
    Truth value(LitId l) const { return status_[l]; }
    bool is_true(LitId l) const { return status_[l] == Truth::True; }
    bool is_false(LitId l) const { return status_[l] == Truth::False; }
    bool is_undef(LitId l) const { return status_[l] == Truth::Undef; }

    bool total() const { return trail_.size() == status_.size(); }
    bool in_conflict() const { return conflict_; }
    void flag_conflict() { conflict_ = true; }
    void clear_conflict() { conflict_ = false; }

    void assign(LitId l, Truth t) {
        if (t == Truth::Undef || status_[l] != Truth::Undef)
            throw UsageError("invalid assignment");
        status_[l] = t;
        trail_.push_back(l);
    }

    /// Undoes the most recent assignment and returns the literal.
    LitId pop() {
        LitId l = trail_.back();
        trail_.pop_back();
        status_[l] = Truth::Undef;
        return l;
    }

    const std::vector<LitId>& trail() const { return trail_; }
    size_t trail_size() const { return trail_.size(); }

    std::vector<LitId> true_literals() const {
        std::vector<LitId> out;
        for (LitId l : trail_)
            if (status_[l] == Truth::True)
                out.push_back(l);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::vector<Truth> status_;
    std::vector<LitId> trail_;
    bool conflict_ = false;
};

} // namespace disjlog

#endif
