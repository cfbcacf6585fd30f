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

#include "disjlog/generators.hpp"

#include <random>

#include "disjlog/errors.hpp"

namespace disjlog {

namespace {

// One constraint forbidding a monochromatic clique: color atoms over every
// ordered pair of the clique variables plus the ordering chain.
std::string clique_constraint(const std::string& color, int size) {
    std::string out = ":- ";
    bool first = true;
    for (int i = 1; i <= size; ++i)
        for (int j = i + 1; j <= size; ++j) {
            if (!first)
                out += ", ";
            out += color + "(X" + std::to_string(i) + ",X" + std::to_string(j) + ")";
            first = false;
        }
    for (int i = 1; i < size; ++i)
        out += ", X" + std::to_string(i) + " < X" + std::to_string(i + 1);
    out += ".\n";
    return out;
}

} // namespace

std::string gen_ramsey(int k, int m, int n) {
    if (k < 2 || m < 2 || n < 1)
        throw UsageError("gen_ramsey requires k,m >= 2 and n >= 1");
    std::string out;
    for (int i = 1; i <= n; ++i)
        out += "node(" + std::to_string(i) + ").\n";
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out += "arc(" + std::to_string(i) + "," + std::to_string(j) + ").\n";
    out += "blue(X,Y) v red(X,Y) :- arc(X,Y).\n";
    out += clique_constraint("red", k);
    out += clique_constraint("blue", m);
    return out;
}

std::string gen_2qbf_facts(const QbfFormula& f) {
    auto var_name = [&](int v) {
        if (v < 0 || v >= f.n_exists + f.n_forall)
            throw UsageError("2qbf: variable index out of range");
        return v < f.n_exists ? "x" + std::to_string(v + 1)
                              : "y" + std::to_string(v - f.n_exists + 1);
    };
    std::string out;
    for (int v = 0; v < f.n_exists; ++v)
        out += "exists(x" + std::to_string(v + 1) + ").\n";
    for (int v = 0; v < f.n_forall; ++v)
        out += "forall(y" + std::to_string(v + 1) + ").\n";
    for (const auto& disjunct : f.disjuncts) {
        std::string pos[3], neg[3];
        for (int i = 0; i < 3; ++i) {
            auto [v, positive] = disjunct[i];
            pos[i] = positive ? var_name(v) : "true";
            neg[i] = positive ? "false" : var_name(v);
        }
        out += "term(" + pos[0] + "," + pos[1] + "," + pos[2] + "," + neg[0] + "," + neg[1] +
               "," + neg[2] + ").\n";
    }
    return out;
}

QbfFormula random_qbf(int n_exists, int n_forall, int n_disjuncts, uint64_t seed) {
    std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dull + 7);
    QbfFormula f;
    f.n_exists = n_exists;
    f.n_forall = n_forall;
    const int total = n_exists + n_forall;
    for (int d = 0; d < n_disjuncts; ++d) {
        std::array<std::pair<int, bool>, 3> lits;
        for (int i = 0; i < 3; ++i)
            lits[i] = {static_cast<int>(rng() % total), (rng() % 2) == 0};
        f.disjuncts.push_back(lits);
    }
    return f;
}

std::string gen_stratcomp_facts(int n, uint64_t seed) {
    if (n < 2)
        throw UsageError("gen_stratcomp requires at least two companies");
    std::mt19937_64 rng(seed * 0x5851f42d4c957f2dull + 3);
    auto company = [&] { return 1 + static_cast<int>(rng() % n); };
    std::string out;
    for (int c = 1; c <= n; ++c)
        out += "company(" + std::to_string(c) + ").\n";
    for (int g = 1; g <= 3 * n; ++g) {
        out += "prod_by(g" + std::to_string(g);
        for (int i = 0; i < 4; ++i)
            out += "," + std::to_string(company());
        out += ").\n";
    }
    for (int c = 1; c <= n; ++c)
        for (int rel = 0; rel < 10; ++rel) {
            out += "contr_by(" + std::to_string(c);
            for (int i = 0; i < 4; ++i)
                out += "," + std::to_string(company());
            out += ").\n";
        }
    return out;
}

std::string gen_graph(GraphKind kind, int n, double density, uint64_t seed) {
    if (n < 2)
        throw UsageError("gen_graph requires at least two nodes");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 11);
    auto chance = [&] { return (rng() % 1000000) / 1000000.0; };
    std::string out;
    for (int i = 0; i < n; ++i)
        out += "node(" + std::to_string(i) + ").\n";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (chance() > density)
                continue;
            if (kind == GraphKind::Tsp) {
                int cost = 1 + static_cast<int>(rng() % 10);
                out += "arc(" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(cost) + ").\n";
            } else {
                out += "arc(" + std::to_string(i) + "," + std::to_string(j) + ").\n";
            }
        }
    out += "start(0).\n";
    return out;
}

std::string gen_samegen_board(int m) {
    if (m < 1)
        throw UsageError("gen_samegen_board requires a positive size");
    std::string out;
    auto cell = [](int i, int j) {
        return "p_" + std::to_string(i) + "_" + std::to_string(j);
    };
    for (int i = 1; i < m; ++i)
        for (int j = 1; j <= m; ++j) {
            out += "parent(" + cell(i, j) + "," + cell(i + 1, j) + ").\n";
            if (j < m)
                out += "parent(" + cell(i, j) + "," + cell(i + 1, j + 1) + ").\n";
        }
    return out;
}

} // namespace disjlog
