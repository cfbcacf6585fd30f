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

#ifndef DISJLOG_ERRORS_HPP
#define DISJLOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace disjlog {

/// Violation of an API precondition (caller bug).
class UsageError : public std::logic_error {
public:
    explicit UsageError(const std::string& what) : std::logic_error(what) {}
};

/// A configurable resource cap was exceeded (e.g. ground rule limit).
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Errors detected while instantiating a program (bad binding patterns,
/// non-positive weak constraint weights after substitution, ...).
class GroundingError : public std::runtime_error {
public:
    explicit GroundingError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace disjlog

#endif
