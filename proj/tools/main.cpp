// Copyright 2026 The Hypergram Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypergram/assign.hpp"
#include "hypergram/degree.hpp"
#include "hypergram/errors.hpp"
#include "hypergram/geometry.hpp"
#include "hypergram/hypergram.hpp"
#include "hypergram/io.hpp"

namespace {

using namespace hypergram;
using nlohmann::ordered_json;

void emit(const std::string &json, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << json;
    } else {
        io::write_file(out_path, json);
    }
}

HypergramData load_hypergram(const std::string &path) {
    return io::parse_hypergram(io::read_file(path));
}

PauliAssignment load_assignment(const std::string &path) {
    return io::parse_assignment(io::read_file(path));
}

// HYPERGRAM_THREADS overrides --threads; 0 means "pick hardware parallelism".
unsigned resolve_threads(unsigned flag_value) {
    if (const char *env = std::getenv("HYPERGRAM_THREADS")) {
        char *end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (!end || *end != '\0' || v < 1 || v > 4096) {
            throw std::invalid_argument("HYPERGRAM_THREADS must be a positive integer");
        }
        return (unsigned)v;
    }
    if (flag_value > 0) {
        return flag_value;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

struct DegreeOptions {
    std::string hypergram_path;
    std::string signs_path;
    std::string assignment_path;
    bool auto_assign = false;
    std::string method = "auto";
    unsigned threshold = kDefaultRankThreshold;
    HeuristicParams params;
    unsigned threads = 0;
    std::string out_path;
};

void add_degree_options(CLI::App *sub, DegreeOptions &opt) {
    sub->add_option("hypergram", opt.hypergram_path, "Hypergram JSON file")->required();
    auto *src = sub->add_option_group("signs", "Source of the sign vector");
    src->add_option("--signs", opt.signs_path, "Sign vector JSON file");
    src->add_option("--assignment", opt.assignment_path, "Pauli assignment JSON file");
    src->add_flag("--auto-assign", opt.auto_assign,
                  "Construct a Pauli assignment and use its sign function");
    src->require_option(1);
    sub->add_option("--method", opt.method, "Degree solver")
        ->check(CLI::IsMember({"exact", "heuristic", "auto"}))
        ->capture_default_str();
    sub->add_option("--threshold", opt.threshold,
                    "Largest context-matrix rank the exact solver accepts")
        ->capture_default_str();
    sub->add_option("--seed", opt.params.seed, "Heuristic seed")->capture_default_str();
    sub->add_option("--restarts", opt.params.restarts, "Heuristic restarts")
        ->capture_default_str();
    sub->add_option("--max-flips", opt.params.max_flips, "Flips per restart")
        ->capture_default_str();
    sub->add_option("--tabu", opt.params.tabu_tenure, "Tabu tenure in flips")
        ->capture_default_str();
    sub->add_option("--threads", opt.threads,
                    "Worker threads for heuristic restarts (default: all cores)");
    sub->add_option("-o,--output", opt.out_path, "Write the JSON result to a file");
}

DegreeResult run_degree(const DegreeOptions &opt, size_t &contexts) {
    Hypergram hg = Hypergram::from_data(load_hypergram(opt.hypergram_path));
    SignVector s;
    if (opt.auto_assign) {
        s = sign_function(pauli_assignment_from_anticommutations(hg), hg);
    } else if (!opt.assignment_path.empty()) {
        s = sign_function(load_assignment(opt.assignment_path), hg);
    } else {
        s = io::parse_signs(io::read_file(opt.signs_path));
        if (s.signs.size() != hg.hyperedges().size()) {
            throw DomainError(Err::VertexSetMismatch,
                              std::to_string(s.signs.size()) + " signs for " +
                                  std::to_string(hg.hyperedges().size()) + " contexts");
        }
    }
    contexts = hg.hyperedges().size();
    std::string method = opt.method;
    if (method == "auto") {
        method = rank(hg.context_matrix()) <= opt.threshold ? "exact" : "heuristic";
    }
    if (method == "exact") {
        return degree_exact(hg, s, opt.threshold);
    }
    return degree_heuristic(hg, s, opt.params, resolve_threads(opt.threads));
}

int cmd_validate(const std::string &path) {
    HypergramData data;
    try {
        data = load_hypergram(path);
    } catch (const InvalidHypergram &ex) {
        std::cout << io::validation_report_json(ex.report());
        std::cerr << ex.report().issues.size() << " violation(s)\n";
        return 1;
    }
    ValidationReport report = validate(data);
    std::cout << io::validation_report_json(report);
    if (!report.ok()) {
        std::cerr << report.issues.size() << " violation(s)\n";
        return 1;
    }
    std::cerr << "valid\n";
    return 0;
}

int cmd_assignable(const std::string &path) {
    HypergramData data = load_hypergram(path);
    ValidationReport report = validate(data);
    AssignabilityCheck check = check_assignability(data);
    std::cout << io::assignability_json(check, report);
    if (!check.assignable) {
        std::cerr << "not assignable: C(H) x A(G) has " << check.nonzero_entries.size()
                  << " nonzero entries\n";
        return 1;
    }
    std::cerr << "assignable\n";
    return 0;
}

int cmd_assign(const std::string &path, const std::string &out_path, bool check_invariants) {
    HypergramData data = load_hypergram(path);
    AssignabilityCheck check = check_assignability(data);
    if (!check.assignable) {
        auto [r, c] = check.nonzero_entries.front();
        throw DomainError(Err::NotAssignable,
                          "C(H) x A(G) is nonzero at (" + std::to_string(r + 1) + ", " +
                              std::to_string(c + 1) + ")");
    }
    Hypergram hg = Hypergram::from_data(std::move(data));
    PauliAssignment a = pauli_assignment_from_anticommutations(hg, check_invariants);
    emit(io::assignment_json(a), out_path);
    std::cerr << "n = " << a.qubits << " qubits\n";
    return 0;
}

int cmd_signs(const std::string &hg_path, const std::string &a_path,
              const std::string &out_path) {
    Hypergram hg = Hypergram::from_data(load_hypergram(hg_path));
    SignVector s = sign_function(load_assignment(a_path), hg);
    emit(io::signs_json(s), out_path);
    size_t negatives = (size_t)std::count(s.signs.begin(), s.signs.end(), (int8_t)-1);
    std::cerr << negatives << " of " << s.signs.size() << " contexts negative\n";
    return 0;
}

int cmd_degree(const DegreeOptions &opt) {
    size_t contexts = 0;
    DegreeResult r = run_degree(opt, contexts);
    emit(io::degree_result_json(r), opt.out_path);
    std::cerr << "degree " << r.value << (r.exact ? " (exact, " : " (upper bound, ")
              << r.method << "); noncontextual bound "
              << noncontextual_bound(contexts, r.value) << "\n";
    return 0;
}

int cmd_bound(const DegreeOptions &opt) {
    size_t contexts = 0;
    DegreeResult r = run_degree(opt, contexts);
    ordered_json j;
    j["contexts"] = contexts;
    j["degree"] = r.value;
    j["exact"] = r.exact;
    j["bound"] = noncontextual_bound(contexts, r.value);
    emit(j.dump(2) + "\n", opt.out_path);
    std::cerr << "b = " << noncontextual_bound(contexts, r.value) << "\n";
    return 0;
}

int cmd_transfer(const std::string &hg_path, const std::string &first_path,
                 const std::string &second_path, const std::string &values_path,
                 const std::string &out_path) {
    Hypergram hg = Hypergram::from_data(load_hypergram(hg_path));
    PauliAssignment a1 = load_assignment(first_path);
    PauliAssignment a2 = load_assignment(second_path);
    ClassicalAssignment v1 =
        io::parse_classical(io::read_file(values_path), hg.vertex_count());
    ClassicalAssignment v2 = transfer_classical(a1, a2, v1, hg);
    emit(io::classical_json(v2), out_path);
    auto print_set = [](const char *tag, const std::vector<size_t> &set) {
        std::cerr << tag << " unsatisfied contexts:";
        for (size_t e : set) {
            std::cerr << ' ' << e + 1;
        }
        std::cerr << " (" << set.size() << ")\n";
    };
    print_set("input", unsatisfied_set(a1, v1, hg));
    print_set("output", unsatisfied_set(a2, v2, hg));
    return 0;
}

int cmd_generate(const std::string &kind, unsigned n, bool n_given,
                 const std::string &out_path, const std::string &assignment_out) {
    if (kind == "lines") {
        if (!n_given) {
            std::cerr << "error: lines requires --n\n";
            return 2;
        }
        LineConfiguration lc = wn_lines(n);
        emit(io::line_configuration_json(lc), out_path);
        size_t negatives =
            (size_t)std::count(lc.signs.signs.begin(), lc.signs.signs.end(), (int8_t)-1);
        std::cerr << lc.lines.size() << " contexts, " << negatives << " negative\n";
        return 0;
    }
    if (kind == "nonassignable") {
        if (!assignment_out.empty()) {
            std::cerr << "error: nonassignable has no Pauli assignment\n";
            return 2;
        }
        HypergramData data = nonassignable_example();
        emit(io::hypergram_json(data), out_path);
        std::cerr << data.vertex_count << " vertices, " << data.hyperedges.size()
                  << " hyperedges\n";
        return 0;
    }
    LabeledHypergram fixture = kind == "doily"        ? doily()
                               : kind == "two-spread" ? two_spread()
                                                      : two_spread_variant();
    emit(io::hypergram_json(fixture.hypergram.data()), out_path);
    if (!assignment_out.empty()) {
        io::write_file(assignment_out, io::assignment_json(fixture.assignment));
    }
    std::cerr << fixture.hypergram.vertex_count() << " vertices, "
              << fixture.hypergram.hyperedges().size() << " hyperedges\n";
    return 0;
}

int cmd_info(const std::string &path) {
    HypergramData data = load_hypergram(path);
    ValidationReport report = validate(data);
    AssignabilityCheck check = check_assignability(data);
    unsigned context_rank = rank(context_matrix(data));
    unsigned gram_rank = rank(anticommutation_matrix(data));
    ordered_json j;
    j["vertices"] = data.vertex_count;
    j["hyperedges"] = data.hyperedges.size();
    j["anticommutations"] = data.anticommutations.size();
    j["valid"] = report.ok();
    j["assignable"] = check.assignable;
    j["context_rank"] = context_rank;
    j["anticommutation_rank"] = gram_rank;
    if (check.assignable) {
        j["qubits"] = gram_rank / 2;
    }
    j["kernel_capacity_ok"] = kernel_capacity_ok(data);
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hypergram tools: validation, Pauli assignment, sign functions, "
                 "contextuality degree"};
    app.require_subcommand(1);

    std::string validate_path;
    auto *validate_cmd =
        app.add_subcommand("validate", "Check a hypergram file against the definition");
    validate_cmd->add_option("hypergram", validate_path, "Hypergram JSON file")->required();

    std::string assignable_path;
    auto *assignable_cmd =
        app.add_subcommand("assignable", "Decide whether C(H) x A(G) vanishes");
    assignable_cmd->add_option("hypergram", assignable_path, "Hypergram JSON file")
        ->required();

    std::string assign_path, assign_out;
    bool assign_check = false;
    auto *assign_cmd =
        app.add_subcommand("assign", "Construct a Pauli assignment from the "
                                     "anticommutation matrix");
    assign_cmd->add_option("hypergram", assign_path, "Hypergram JSON file")->required();
    assign_cmd->add_option("-o,--output", assign_out, "Write the assignment to a file");
    assign_cmd->add_flag("--check", assign_check,
                         "Re-verify the elimination invariants at every step");

    std::string signs_hg, signs_a, signs_out;
    auto *signs_cmd = app.add_subcommand("signs", "Sign function of an assignment");
    signs_cmd->add_option("hypergram", signs_hg, "Hypergram JSON file")->required();
    signs_cmd->add_option("--assignment", signs_a, "Pauli assignment JSON file")->required();
    signs_cmd->add_option("-o,--output", signs_out, "Write the sign vector to a file");

    DegreeOptions degree_opt;
    auto *degree_cmd = app.add_subcommand("degree", "Contextuality degree of a hypergram "
                                                    "with a sign vector");
    add_degree_options(degree_cmd, degree_opt);

    DegreeOptions bound_opt;
    auto *bound_cmd = app.add_subcommand("bound", "Noncontextual bound |C| - 2d");
    add_degree_options(bound_cmd, bound_opt);

    std::string transfer_hg, transfer_first, transfer_second, transfer_values, transfer_out;
    auto *transfer_cmd = app.add_subcommand(
        "transfer", "Carry classical values from one assignment to another");
    transfer_cmd->add_option("hypergram", transfer_hg, "Hypergram JSON file")->required();
    transfer_cmd->add_option("--first", transfer_first, "Assignment the values satisfy")
        ->required();
    transfer_cmd->add_option("--second", transfer_second, "Assignment to transfer onto")
        ->required();
    transfer_cmd->add_option("--values", transfer_values, "Classical values for --first")
        ->required();
    transfer_cmd->add_option("-o,--output", transfer_out, "Write the result to a file");

    std::string generate_kind, generate_out, generate_assignment_out;
    unsigned generate_n = 2;
    auto *generate_cmd = app.add_subcommand("generate", "Write a built-in structure");
    generate_cmd
        ->add_option("kind", generate_kind,
                     "doily | two-spread | two-spread-variant | nonassignable | lines")
        ->required()
        ->check(CLI::IsMember(
            {"doily", "two-spread", "two-spread-variant", "nonassignable", "lines"}));
    auto *n_opt = generate_cmd->add_option("--n", generate_n, "Qubit count for lines")
                      ->check(CLI::Range(2u, 7u));
    generate_cmd->add_option("-o,--output", generate_out, "Write the structure to a file");
    generate_cmd->add_option("--assignment-out", generate_assignment_out,
                             "Also write the built-in Pauli assignment");

    std::string info_path;
    auto *info_cmd = app.add_subcommand("info", "Summary of a hypergram file");
    info_cmd->add_option("hypergram", info_path, "Hypergram JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate_cmd->parsed()) {
            return cmd_validate(validate_path);
        }
        if (assignable_cmd->parsed()) {
            return cmd_assignable(assignable_path);
        }
        if (assign_cmd->parsed()) {
            return cmd_assign(assign_path, assign_out, assign_check);
        }
        if (signs_cmd->parsed()) {
            return cmd_signs(signs_hg, signs_a, signs_out);
        }
        if (degree_cmd->parsed()) {
            return cmd_degree(degree_opt);
        }
        if (bound_cmd->parsed()) {
            return cmd_bound(bound_opt);
        }
        if (transfer_cmd->parsed()) {
            return cmd_transfer(transfer_hg, transfer_first, transfer_second,
                                transfer_values, transfer_out);
        }
        if (generate_cmd->parsed()) {
            return cmd_generate(generate_kind, generate_n, n_opt->count() > 0, generate_out,
                                generate_assignment_out);
        }
        if (info_cmd->parsed()) {
            return cmd_info(info_path);
        }
    } catch (const io::ParseError &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const InvalidHypergram &ex) {
        std::cerr << "error: invalid hypergram\n";
        for (const auto &issue : ex.report().issues) {
            std::cerr << "  " << violation_name(issue.code) << ": " << issue.detail << "\n";
        }
        return 1;
    } catch (const DomainError &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::invalid_argument &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
