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

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "disjlog/generators.hpp"
#include "disjlog/oracle.hpp"
#include "disjlog/parser.hpp"
#include "disjlog/solver.hpp"

namespace {

using namespace disjlog;

constexpr const char* kUsage = R"(usage: disjlog [options] file...
       disjlog gen-ramsey -k=K -m=M -n=N
       disjlog gen-2qbf -x=NX -y=NY -t=TERMS -seed=S
       disjlog gen-stratcomp -n=N -seed=S
       disjlog gen-graph -kind=hampath|tsp -n=N -density=D -seed=S
       disjlog gen-samegen -m=M

options:
  -n=<K|all>          number of models to print (default: all)
  -N=<maxint>         integer range bound (default: 0)
  -brave <literal>    true in some (optimal) answer set?
  -cautious <literal> true in all (optimal) answer sets?
  -check <modelfile>  answer-set check (one literal per line)
  --instantiate       print the ground residual program and exit
  --classify          print the evaluation class and analysis flags
  --stats             print a statistics line
  --filter=<p,...>    print only literals of the listed predicates
  --force-full        route through the full generator/checker pipeline
  --ground-limit=<n>  cap on emitted ground rules (default: 10000000)

exit codes: 0 models found / query answered, 1 no models, 2 usage or input error.
)";

struct CliOptions {
    SolveOptions solve;
    std::vector<std::string> files;
    std::vector<std::string> filter;
    std::optional<std::string> brave_query;
    std::optional<std::string> cautious_query;
    std::optional<std::string> check_file;
    bool instantiate = false;
    bool classify_only = false;
    bool stats = false;
};

int fail_usage(const std::string& message) {
    std::cerr << "disjlog: " << message << "\n" << kUsage;
    return 2;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty())
            out.push_back(part);
    return out;
}

std::optional<std::string> flag_value(const std::string& arg, const std::string& name) {
    if (arg.rfind(name + "=", 0) == 0)
        return arg.substr(name.size() + 1);
    return std::nullopt;
}

// Parses one classical literal via the program parser ("lit." as a fact).
std::optional<ClassicalLiteral> parse_literal(const std::string& text) {
    ParseResult pr = parse_program(text + ".");
    if (!pr.ok() || pr.program.rules.size() != 1 || pr.program.rules[0].head.size() != 1 ||
        !pr.program.rules[0].body.empty())
        return std::nullopt;
    return pr.program.rules[0].head[0];
}

void print_stats(const SolveStats& s) {
    std::cout << "stats: choices=" << s.choices << " backtracks=" << s.backtracks
              << " checker_calls=" << s.checker_calls << " ground_rules=" << s.ground_rules
              << " ground_weak_constraints=" << s.ground_weak_constraints
              << " certain_atoms=" << s.certain_atoms << "\n";
}

int run_generator(const std::string& cmd, const std::vector<std::string>& args) {
    int64_t k = 3, m = 3, n = 5, x = 2, y = 2, t = 3, seed = 1;
    double density = 0.5;
    std::string kind = "hampath";
    for (const std::string& a : args) {
        if (auto v = flag_value(a, "-k")) k = std::stoll(*v);
        else if (auto v = flag_value(a, "-m")) m = std::stoll(*v);
        else if (auto v = flag_value(a, "-n")) n = std::stoll(*v);
        else if (auto v = flag_value(a, "-x")) x = std::stoll(*v);
        else if (auto v = flag_value(a, "-y")) y = std::stoll(*v);
        else if (auto v = flag_value(a, "-t")) t = std::stoll(*v);
        else if (auto v = flag_value(a, "-seed")) seed = std::stoll(*v);
        else if (auto v = flag_value(a, "-density")) density = std::stod(*v);
        else if (auto v = flag_value(a, "-kind")) kind = *v;
        else return fail_usage("unknown generator flag " + a);
    }
    if (cmd == "gen-ramsey") {
        std::cout << gen_ramsey(static_cast<int>(k), static_cast<int>(m), static_cast<int>(n));
    } else if (cmd == "gen-2qbf") {
        std::cout << gen_2qbf_facts(random_qbf(static_cast<int>(x), static_cast<int>(y),
                                               static_cast<int>(t),
                                               static_cast<uint64_t>(seed)));
    } else if (cmd == "gen-stratcomp") {
        std::cout << gen_stratcomp_facts(static_cast<int>(n), static_cast<uint64_t>(seed));
    } else if (cmd == "gen-graph") {
        if (kind != "hampath" && kind != "tsp")
            return fail_usage("gen-graph kind must be hampath or tsp");
        std::cout << gen_graph(kind == "tsp" ? GraphKind::Tsp : GraphKind::HamPath,
                               static_cast<int>(n), density, static_cast<uint64_t>(seed));
    } else if (cmd == "gen-samegen") {
        std::cout << gen_samegen_board(static_cast<int>(m));
    } else {
        return fail_usage("unknown generator " + cmd);
    }
    return 0;
}

int run(const CliOptions& opts) {
    std::string text;
    for (const std::string& file : opts.files) {
        std::ifstream in(file);
        if (!in)
            return fail_usage("cannot open " + file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        text += buffer.str();
        text += "\n";
    }

    ParseResult parsed = parse_program(text);
    for (const ParseDiagnostic& d : parsed.diagnostics)
        std::cerr << d.to_string() << "\n";
    if (!parsed.ok())
        return 2;

    if (opts.classify_only) {
        ClassificationResult c = classify(parsed.program);
        std::cout << "class=" << fragment_class_name(c.fragment) << "\n"
                  << "has_disjunction=" << (c.has_disjunction ? "true" : "false") << "\n"
                  << "is_hcf=" << (c.is_hcf ? "true" : "false") << "\n"
                  << "has_naf=" << (c.has_naf ? "true" : "false") << "\n"
                  << "is_stratified=" << (c.is_stratified ? "true" : "false") << "\n"
                  << "has_weak_constraints="
                  << (c.has_weak_constraints ? "true" : "false") << "\n";
        if (c.stratification.stratified)
            for (const auto& [pred, level] : c.stratification.levels)
                std::cout << "stratum." << pred.to_string() << "=" << level << "\n";
        return 0;
    }

    if (opts.instantiate) {
        std::cout << instantiate_text(parsed.program, opts.solve);
        return 0;
    }

    if (opts.check_file) {
        std::ifstream in(*opts.check_file);
        if (!in)
            return fail_usage("cannot open " + *opts.check_file);
        std::vector<ClassicalLiteral> model;
        std::string line;
        while (std::getline(in, line)) {
            size_t comment = line.find('%');
            if (comment != std::string::npos)
                line = line.substr(0, comment);
            while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
                line.pop_back();
            size_t start = 0;
            while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
                ++start;
            line = line.substr(start);
            if (line.empty())
                continue;
            auto lit = parse_literal(line);
            if (!lit)
                return fail_usage("cannot parse model literal '" + line + "'");
            model.push_back(*lit);
        }
        ModelCheckOutcome outcome = check_model(parsed.program, model, opts.solve);
        if (outcome.accepted) {
            std::cout << "yes\n";
        } else {
            std::cout << "no (" << outcome.detail << ")\n";
            if (!outcome.witness.empty())
                std::cout << "witness: " << format_model(outcome.witness) << "\n";
        }
        return 0;
    }

    if (opts.brave_query || opts.cautious_query) {
        const bool is_brave = opts.brave_query.has_value();
        auto lit = parse_literal(is_brave ? *opts.brave_query : *opts.cautious_query);
        if (!lit)
            return fail_usage("cannot parse query literal");
        if (!lit->is_ground())
            return fail_usage("query literal must be ground");
        QueryResult qr = is_brave ? brave(parsed.program, *lit, opts.solve)
                                  : cautious(parsed.program, *lit, opts.solve);
        std::cout << (qr.holds ? "yes" : "no") << "\n";
        if (qr.example)
            std::cout << (is_brave ? "witness: " : "counterexample: ")
                      << format_model(qr.example->literals, opts.filter) << "\n";
        if (opts.stats)
            print_stats(qr.stats);
        return 0;
    }

    SolveResult result = solve(parsed.program, opts.solve);
    for (const SolveModel& model : result.models) {
        std::cout << format_model(model.literals, opts.filter) << "\n";
        if (result.has_weak_constraints)
            std::cout << "Cost ([Weight:Level]): " << model.cost.to_string() << "\n";
    }
    if (opts.stats)
        print_stats(result.stats);
    if (!result.satisfiable) {
        std::cerr << "no answer sets\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && args[0].rfind("gen-", 0) == 0)
        return run_generator(args[0], {args.begin() + 1, args.end()});

    CliOptions opts;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--help" || a == "-h") {
            std::cout << kUsage;
            return 0;
        } else if (auto v = flag_value(a, "-n")) {
            if (*v == "all" || *v == "0")
                opts.solve.max_models = 0;
            else
                opts.solve.max_models = static_cast<size_t>(std::stoull(*v));
        } else if (auto v = flag_value(a, "-N")) {
            opts.solve.maxint = std::stoll(*v);
        } else if (a == "-brave") {
            if (++i >= args.size())
                return fail_usage("-brave needs a literal");
            opts.brave_query = args[i];
        } else if (a == "-cautious") {
            if (++i >= args.size())
                return fail_usage("-cautious needs a literal");
            opts.cautious_query = args[i];
        } else if (a == "-check") {
            if (++i >= args.size())
                return fail_usage("-check needs a model file");
            opts.check_file = args[i];
        } else if (a == "--instantiate") {
            opts.instantiate = true;
        } else if (a == "--classify") {
            opts.classify_only = true;
        } else if (a == "--stats") {
            opts.stats = true;
        } else if (a == "--force-full") {
            opts.solve.force_full_pipeline = true;
        } else if (auto v = flag_value(a, "--filter")) {
            opts.filter = split_commas(*v);
        } else if (auto v = flag_value(a, "--ground-limit")) {
            opts.solve.ground_limit = static_cast<size_t>(std::stoull(*v));
        } else if (!a.empty() && a[0] == '-' && a != "-") {
            return fail_usage("unknown option " + a);
        } else {
            opts.files.push_back(a);
        }
    }
    if (opts.files.empty())
        return fail_usage("no input files");

    try {
        return run(opts);
    } catch (const std::exception& e) {
        std::cerr << "disjlog: " << e.what() << "\n";
        return 2;
    }
}
