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

#include "disjlog/optimizer.hpp"

#include <algorithm>

#include "disjlog/errors.hpp"

namespace disjlog {

int CostVector::compare(const CostVector& a, const CostVector& b) {
    size_t levels = std::max(a.level_weight.size(), b.level_weight.size());
    for (size_t i = levels; i > 0; --i) {
        int64_t wa = a.at_level(static_cast<int64_t>(i));
        int64_t wb = b.at_level(static_cast<int64_t>(i));
        if (wa != wb)
            return wa < wb ? -1 : 1;
    }
    return 0;
}

std::string CostVector::to_string() const {
    std::string out;
    for (size_t i = level_weight.size(); i > 0; --i) {
        if (!out.empty())
            out += " ";
        out += std::to_string(level_weight[i - 1]) + ":" + std::to_string(i);
    }
    return out.empty() ? "0:1" : out;
}

std::vector<std::vector<int>> violated(const std::vector<GroundWeakConstraint>& wcs,
                                       const std::vector<LitId>& A, size_t n_literals) {
    std::vector<char> in(n_literals, 0);
    for (LitId l : A) {
        if (l < 0 || static_cast<size_t>(l) >= n_literals)
            throw UsageError("literal id out of range");
        in[l] = 1;
    }
    int64_t lmax = 0;
    for (const GroundWeakConstraint& wc : wcs)
        lmax = std::max(lmax, wc.level);
    std::vector<std::vector<int>> out(static_cast<size_t>(lmax));
    for (size_t i = 0; i < wcs.size(); ++i) {
        const GroundWeakConstraint& wc = wcs[i];
        bool viol = true;
        for (LitId b : wc.body_pos)
            if (!in[b]) {
                viol = false;
                break;
            }
        if (viol)
            for (LitId nb : wc.body_naf)
                if (in[nb]) {
                    viol = false;
                    break;
                }
        if (viol)
            out[static_cast<size_t>(wc.level - 1)].push_back(static_cast<int>(i));
    }
    return out;
}

CostVector cost(const std::vector<GroundWeakConstraint>& wcs, const std::vector<LitId>& A,
                size_t n_literals) {
    std::vector<std::vector<int>> v = violated(wcs, A, n_literals);
    CostVector c;
    c.level_weight.assign(v.size(), 0);
    for (size_t lvl = 0; lvl < v.size(); ++lvl)
        for (int wi : v[lvl])
            c.level_weight[lvl] += wcs[wi].weight;
    return c;
}

std::optional<uint64_t> scalar_cost(const std::vector<GroundWeakConstraint>& wcs,
                                    const CostVector& c) {
    uint64_t wmax = 1;
    for (const GroundWeakConstraint& wc : wcs)
        wmax = std::max(wmax, static_cast<uint64_t>(wc.weight));
    const uint64_t count = wcs.size();
    uint64_t f = 1; // f(1)
    uint64_t total = 0;
    for (size_t lvl = 0; lvl < c.level_weight.size(); ++lvl) {
        if (lvl > 0) {
            // f(n) = f(n-1) * |WC| * w_max + 1
            uint64_t t;
            if (__builtin_mul_overflow(f, count, &t) || __builtin_mul_overflow(t, wmax, &t) ||
                __builtin_add_overflow(t, uint64_t{1}, &t))
                return std::nullopt;
            f = t;
        }
        uint64_t term;
        if (__builtin_mul_overflow(f, static_cast<uint64_t>(c.level_weight[lvl]), &term) ||
            __builtin_add_overflow(total, term, &total))
            return std::nullopt;
    }
    return total;
}

CostVector worst_cost(const std::vector<GroundWeakConstraint>& wcs) {
    int64_t lmax = 0;
    for (const GroundWeakConstraint& wc : wcs)
        lmax = std::max(lmax, wc.level);
    CostVector c;
    c.level_weight.assign(static_cast<size_t>(lmax), 0);
    for (const GroundWeakConstraint& wc : wcs)
        c.level_weight[static_cast<size_t>(wc.level - 1)] += wc.weight;
    return c;
}

} // namespace disjlog
