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

#include "disjlog/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "disjlog/errors.hpp"
#include "disjlog/grounder.hpp"

namespace disjlog {

namespace {

// Self-contained bitmask view of the naive grounding. The oracle works on
// literal sets directly and shares nothing with the solving pipeline.
struct MaskProgram {
    std::vector<ClassicalLiteral> literals; // bit i <-> literals[i]
    std::vector<uint32_t> complement_bit;   // bit of the complement, 0 if absent
    struct MRule {
        uint32_t head = 0, pos = 0, naf = 0;
    };
    std::vector<MRule> rules;
    struct MWeak {
        uint32_t pos = 0, naf = 0;
        int64_t weight = 1, level = 1;
    };
    std::vector<MWeak> weaks;
    int64_t max_level = 0;
};

MaskProgram build_mask_program(const GroundProgram& g, size_t cap) {
    std::vector<LitId> mentioned = g.mentioned_literals();
    if (mentioned.size() > cap)
        throw ResourceLimitError("oracle refuses: ground literal base has " +
                                 std::to_string(mentioned.size()) + " literals (cap " +
                                 std::to_string(cap) + ")");
    MaskProgram mp;
    std::map<LitId, int> bit;
    for (LitId l : mentioned) {
        bit[l] = static_cast<int>(mp.literals.size());
        mp.literals.push_back(g.index.lookup(l));
    }
    mp.complement_bit.assign(mp.literals.size(), 0);
    for (LitId l : mentioned) {
        LitId c = g.index.complement_of(l);
        if (c != kNoLit && bit.count(c))
            mp.complement_bit[bit[l]] = uint32_t{1} << bit[c];
    }
    auto mask_of = [&](const std::vector<LitId>& ids) {
        uint32_t m = 0;
        for (LitId l : ids)
            m |= uint32_t{1} << bit.at(l);
        return m;
    };
    for (const GroundRule& r : g.rules)
        mp.rules.push_back({mask_of(r.head), mask_of(r.body_pos), mask_of(r.body_naf)});
    for (const GroundWeakConstraint& wc : g.weak_constraints) {
        mp.weaks.push_back({mask_of(wc.body_pos), mask_of(wc.body_naf), wc.weight, wc.level});
        mp.max_level = std::max(mp.max_level, wc.level);
    }
    return mp;
}

bool consistent(const MaskProgram& mp, uint32_t x) {
    for (size_t i = 0; i < mp.literals.size(); ++i)
        if ((x & (uint32_t{1} << i)) && (x & mp.complement_bit[i]))
            return false;
    return true;
}

// Closedness of y under the reduct w.r.t. x.
bool closed_under_reduct(const MaskProgram& mp, uint32_t x, uint32_t y) {
    for (const auto& r : mp.rules) {
        if (r.naf & x)
            continue; // deleted by the transform
        if ((r.pos & y) == r.pos && (r.head & y) == 0)
            return false;
    }
    return true;
}

bool is_oracle_answer_set(const MaskProgram& mp, uint32_t x) {
    if (!consistent(mp, x))
        return false;
    if (!closed_under_reduct(mp, x, x))
        return false;
    // Exhaustive minimality: no consistent proper subset may be closed.
    for (uint32_t sub = (x - 1) & x;; sub = (sub - 1) & x) {
        if (consistent(mp, sub) && closed_under_reduct(mp, x, sub))
            return false;
        if (sub == 0)
            break;
    }
    return true;
}

std::vector<int64_t> cost_by_level(const MaskProgram& mp, uint32_t x) {
    std::vector<int64_t> cost(static_cast<size_t>(mp.max_level), 0);
    for (const auto& w : mp.weaks)
        if ((w.pos & x) == w.pos && (w.naf & x) == 0)
            cost[static_cast<size_t>(w.level - 1)] += w.weight;
    return cost;
}

// Lexicographic from the highest level down.
bool cost_less(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
    for (size_t i = a.size(); i > 0; --i)
        if (a[i - 1] != b[i - 1])
            return a[i - 1] < b[i - 1];
    return false;
}

} // namespace

std::vector<std::vector<ClassicalLiteral>> oracle_answer_sets(const Program& p,
                                                              const OracleOptions& opts) {
    HerbrandUniverse u = herbrand_universe(p, opts.maxint);
    GroundProgram g = naive_ground(p, u);
    MaskProgram mp = build_mask_program(g, opts.max_base_literals);

    const uint64_t space = uint64_t{1} << mp.literals.size();
    std::vector<uint32_t> found;
    for (uint64_t x = 0; x < space; ++x)
        if (is_oracle_answer_set(mp, static_cast<uint32_t>(x)))
            found.push_back(static_cast<uint32_t>(x));

    if (opts.optimal_filter && !mp.weaks.empty() && !found.empty()) {
        std::vector<int64_t> best;
        for (uint32_t x : found) {
            std::vector<int64_t> c = cost_by_level(mp, x);
            if (best.empty() || cost_less(c, best))
                best = c;
        }
        std::vector<uint32_t> optimal;
        for (uint32_t x : found)
            if (!cost_less(best, cost_by_level(mp, x)) && !cost_less(cost_by_level(mp, x), best))
                optimal.push_back(x);
        found = std::move(optimal);
    }

    std::vector<std::vector<ClassicalLiteral>> out;
    for (uint32_t x : found) {
        std::vector<ClassicalLiteral> model;
        for (size_t i = 0; i < mp.literals.size(); ++i)
            if (x & (uint32_t{1} << i))
                model.push_back(mp.literals[i]);
        std::sort(model.begin(), model.end(), literal_less);
        out.push_back(std::move(model));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i)
            if (int c = compare_literals(a[i], b[i]))
                return c < 0;
        return false;
    });
    return out;
}

Program random_program(uint64_t seed, const RandomProgramParams& params) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); };
    auto chance = [&](double p) {
        return (rng() % 1000000) < static_cast<uint64_t>(p * 1000000);
    };
    auto atom_name = [&](int i) { return std::string(1, static_cast<char>('a' + i)); };

    auto random_literal = [&] {
        ClassicalLiteral l(Atom(atom_name(pick(params.atoms))),
                           chance(params.strong_neg_probability));
        return l;
    };

    Program p;
    const int n_rules = 1 + pick(params.max_rules);
    for (int i = 0; i < n_rules; ++i) {
        Rule r;
        const int head_len = pick(params.max_head + 1); // 0 = constraint
        for (int h = 0; h < head_len; ++h)
            r.head.push_back(random_literal());
        int body_len = pick(params.max_body + 1);
        if (r.head.empty() && body_len == 0)
            body_len = 1; // an unconditional constraint kills everything
        for (int b = 0; b < body_len; ++b)
            r.body.emplace_back(random_literal(), chance(params.naf_probability));
        p.rules.push_back(std::move(r));
    }
    const int n_weak = pick(params.max_weak_constraints + 1);
    for (int i = 0; i < n_weak; ++i) {
        WeakConstraint wc;
        const int body_len = 1 + pick(params.max_body);
        for (int b = 0; b < body_len; ++b)
            wc.body.emplace_back(random_literal(), chance(params.naf_probability));
        wc.weight = Term::integer(1 + pick(3));
        wc.level = Term::integer(1 + pick(3));
        p.weak_constraints.push_back(std::move(wc));
    }
    return p;
}

} // namespace disjlog
