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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "disjlog/generators.hpp"
#include "disjlog/oracle.hpp"
#include "disjlog/parser.hpp"
#include "disjlog/solver.hpp"

namespace py = pybind11;
using namespace disjlog;

namespace {

Program parse_or_throw(const std::string& text) {
    ParseResult pr = parse_program(text);
    if (!pr.ok()) {
        std::string message;
        for (const ParseDiagnostic& d : pr.diagnostics)
            if (d.severity == ParseDiagnostic::Severity::Error)
                message += d.to_string() + "\n";
        throw std::invalid_argument(message);
    }
    return pr.program;
}

ClassicalLiteral literal_or_throw(const std::string& text) {
    ParseResult pr = parse_program(text + ".");
    if (!pr.ok() || pr.program.rules.size() != 1 || pr.program.rules[0].head.size() != 1)
        throw std::invalid_argument("cannot parse literal: " + text);
    return pr.program.rules[0].head[0];
}

std::vector<std::string> model_strings(const std::vector<ClassicalLiteral>& model) {
    std::vector<std::string> out;
    out.reserve(model.size());
    for (const ClassicalLiteral& l : model)
        out.push_back(l.to_string());
    return out;
}

SolveOptions make_options(int64_t maxint, size_t max_models, bool optimize) {
    SolveOptions opts;
    opts.maxint = maxint;
    opts.max_models = max_models;
    opts.optimize = optimize;
    return opts;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Disjunctive answer-set solver with weak-constraint optimization";

    m.def(
        "check_syntax",
        [](const std::string& text) {
            ParseResult pr = parse_program(text);
            std::vector<std::string> out;
            for (const ParseDiagnostic& d : pr.diagnostics)
                out.push_back(d.to_string());
            return out;
        },
        py::arg("text"), "Parse program text and return the diagnostics as strings.");

    m.def(
        "solve",
        [](const std::string& text, int64_t maxint, size_t max_models, bool optimize) {
            SolveResult r = solve(parse_or_throw(text), make_options(maxint, max_models,
                                                                     optimize));
            py::list models;
            for (const SolveModel& model : r.models)
                models.append(model_strings(model.literals));
            py::dict out;
            out["models"] = models;
            out["satisfiable"] = r.satisfiable;
            out["class"] = fragment_class_name(r.classification.fragment);
            if (r.has_weak_constraints && r.satisfiable) {
                py::list cost;
                for (size_t lvl = r.optimal_cost.level_weight.size(); lvl > 0; --lvl)
                    cost.append(py::make_tuple(r.optimal_cost.level_weight[lvl - 1],
                                               static_cast<int64_t>(lvl)));
                out["cost"] = cost;
            } else {
                out["cost"] = py::none();
            }
            py::dict stats;
            stats["choices"] = r.stats.choices;
            stats["backtracks"] = r.stats.backtracks;
            stats["checker_calls"] = r.stats.checker_calls;
            stats["ground_rules"] = r.stats.ground_rules;
            stats["ground_weak_constraints"] = r.stats.ground_weak_constraints;
            stats["certain_atoms"] = r.stats.certain_atoms;
            out["stats"] = stats;
            return out;
        },
        py::arg("text"), py::arg("maxint") = 0, py::arg("max_models") = 0,
        py::arg("optimize") = true,
        "Answer sets of the program as lists of literal strings.");

    m.def(
        "classify",
        [](const std::string& text) {
            ClassificationResult c = classify(parse_or_throw(text));
            py::dict out;
            out["class"] = fragment_class_name(c.fragment);
            out["has_disjunction"] = c.has_disjunction;
            out["is_hcf"] = c.is_hcf;
            out["has_naf"] = c.has_naf;
            out["is_stratified"] = c.is_stratified;
            out["has_weak_constraints"] = c.has_weak_constraints;
            if (c.stratification.stratified) {
                py::dict strata;
                for (const auto& [pred, level] : c.stratification.levels)
                    strata[py::str(pred.to_string())] = level;
                out["strata"] = strata;
            }
            return out;
        },
        py::arg("text"), "Evaluation class (L1..L5) and analysis flags.");

    m.def(
        "brave",
        [](const std::string& text, const std::string& literal, int64_t maxint) {
            QueryResult r = brave(parse_or_throw(text), literal_or_throw(literal),
                                  make_options(maxint, 0, true));
            return py::make_tuple(r.holds,
                                  r.example ? py::object(py::cast(model_strings(
                                                  r.example->literals)))
                                            : py::none());
        },
        py::arg("text"), py::arg("literal"), py::arg("maxint") = 0,
        "Truth in some (optimal) answer set, with a witness.");

    m.def(
        "cautious",
        [](const std::string& text, const std::string& literal, int64_t maxint) {
            QueryResult r = cautious(parse_or_throw(text), literal_or_throw(literal),
                                     make_options(maxint, 0, true));
            return py::make_tuple(r.holds,
                                  r.example ? py::object(py::cast(model_strings(
                                                  r.example->literals)))
                                            : py::none());
        },
        py::arg("text"), py::arg("literal"), py::arg("maxint") = 0,
        "Truth in all (optimal) answer sets, with a counterexample.");

    m.def(
        "check_answer_set",
        [](const std::string& text, const std::vector<std::string>& model, int64_t maxint) {
            std::vector<ClassicalLiteral> lits;
            for (const std::string& s : model)
                lits.push_back(literal_or_throw(s));
            ModelCheckOutcome r = check_model(parse_or_throw(text), lits,
                                              make_options(maxint, 0, true));
            return py::make_tuple(r.accepted, r.detail, model_strings(r.witness));
        },
        py::arg("text"), py::arg("model"), py::arg("maxint") = 0,
        "Answer-set check for an explicit model (weak constraints ignored).");

    m.def(
        "instantiate",
        [](const std::string& text, int64_t maxint) {
            return instantiate_text(parse_or_throw(text), make_options(maxint, 0, true));
        },
        py::arg("text"), py::arg("maxint") = 0,
        "The residual ground program in source syntax.");

    m.def(
        "oracle_answer_sets",
        [](const std::string& text, int64_t maxint) {
            OracleOptions opts;
            opts.maxint = maxint;
            auto sets = oracle_answer_sets(parse_or_throw(text), opts);
            py::list out;
            for (const auto& s : sets)
                out.append(model_strings(s));
            return out;
        },
        py::arg("text"), py::arg("maxint") = 0,
        "Brute-force reference answer sets (small programs only).");

    m.def("gen_ramsey", &gen_ramsey, py::arg("k"), py::arg("m"), py::arg("n"));
    m.def(
        "gen_2qbf",
        [](int n_exists, int n_forall, int n_disjuncts, uint64_t seed) {
            return gen_2qbf_facts(random_qbf(n_exists, n_forall, n_disjuncts, seed));
        },
        py::arg("n_exists"), py::arg("n_forall"), py::arg("n_disjuncts"), py::arg("seed"));
    m.def("gen_stratcomp", &gen_stratcomp_facts, py::arg("n"), py::arg("seed"));
    m.def(
        "gen_graph",
        [](const std::string& kind, int n, double density, uint64_t seed) {
            return gen_graph(kind == "tsp" ? GraphKind::Tsp : GraphKind::HamPath, n, density,
                             seed);
        },
        py::arg("kind"), py::arg("n"), py::arg("density"), py::arg("seed"));
    m.def("gen_samegen", &gen_samegen_board, py::arg("m"));
}
