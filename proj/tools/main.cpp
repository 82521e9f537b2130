// cagrow: compile Turing machines into one-dimensional cellular automata,
// build growth-rate constructions, and classify automaton-input pairs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cagrow/analysis.hpp"
#include "cagrow/compiler.hpp"
#include "cagrow/constructions.hpp"
#include "cagrow/machine.hpp"
#include "cagrow/rule_io.hpp"
#include "cagrow/transforms.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitConvention = 3;
constexpr int kExitBudget = 4;
constexpr int kExitUnknown = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cagrow::ParseError("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

cagrow::TuringMachineSpec load_machine(const std::string& ref) {
    for (const auto& n : cagrow::builtin_machine_names())
        if (ref == "builtin:" + n || ref == n) return cagrow::builtin_machine(n);
    return cagrow::parse_machine(read_file(ref));
}

cagrow::CaRulePtr load_rule(const std::string& path) {
    return cagrow::parse_rule(read_file(path));
}

cagrow::Configuration load_input(const cagrow::AlphabetPtr& a, const std::string& input,
                                 const std::string& input_file) {
    if (!input_file.empty()) return cagrow::parse_configuration(a, read_file(input_file));
    return cagrow::parse_configuration(a, input);
}

// Every run drops its fully resolved parameters next to the results.
void emit_config(const std::string& out_base, const std::vector<std::pair<std::string, std::string>>& kv) {
    std::ostringstream s;
    for (const auto& [k, v] : kv) s << k << " = " << v << '\n';
    write_file(out_base + ".config", s.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Turing machine to cellular automaton growth workbench"};
    app.require_subcommand(1);

    // --- compile ---
    auto* cmd_compile = app.add_subcommand("compile", "compile a machine into a CA rule file");
    std::string c_machine, c_mode = "simulate", c_out = "rule.ca";
    std::uint64_t c_budget = 1000000;
    bool c_no_conventions = false;
    cmd_compile->add_option("machine", c_machine, "machine file or builtin name")->required();
    cmd_compile->add_option("--mode", c_mode, "simulate | dominating")
        ->check(CLI::IsMember({"simulate", "dominating"}));
    cmd_compile->add_option("--budget", c_budget, "acceptable-site saturation budget (steps)");
    cmd_compile->add_option("-o,--out", c_out, "output rule file");
    cmd_compile->add_flag("--no-conventions", c_no_conventions,
                          "skip the operating-convention check");

    // --- run ---
    auto* cmd_run = app.add_subcommand("run", "evolve a rule on an input");
    std::string r_rule, r_input, r_input_file, r_out = "run", r_emit = "trace";
    std::uint64_t r_steps = 1000;
    cmd_run->add_option("rule", r_rule, "rule file")->required();
    cmd_run->add_option("--input", r_input, "configuration text ('@off sym sym ...')");
    cmd_run->add_option("--input-file", r_input_file, "configuration file");
    cmd_run->add_option("--steps", r_steps, "steps to run");
    cmd_run->add_option("--emit", r_emit, "trace | diagram | both")
        ->check(CLI::IsMember({"trace", "diagram", "both"}));
    cmd_run->add_option("-o,--out", r_out, "output base name");

    // --- classify ---
    auto* cmd_classify = app.add_subcommand("classify", "growth class of a (rule, input) pair");
    std::string k_rule, k_input, k_input_file;
    std::uint64_t k_horizon = 10000;
    bool k_certificate = false;
    cmd_classify->add_option("rule", k_rule, "rule file")->required();
    cmd_classify->add_option("--input", k_input, "configuration text");
    cmd_classify->add_option("--input-file", k_input_file, "configuration file");
    cmd_classify->add_option("--horizon", k_horizon, "step horizon");
    cmd_classify->add_flag("--certificate", k_certificate, "dump the repeat certificate");

    // --- estimate ---
    auto* cmd_estimate = app.add_subcommand("estimate", "per-class input probabilities");
    std::string e_rule, e_out = "estimate";
    std::uint64_t e_n = 10, e_samples = 2000, e_seed = 1, e_horizon = 3000;
    cmd_estimate->add_option("rule", e_rule, "rule file")->required();
    cmd_estimate->add_option("--length", e_n, "input length n");
    cmd_estimate->add_option("--samples", e_samples, "sample count");
    cmd_estimate->add_option("--seed", e_seed, "generator seed");
    cmd_estimate->add_option("--horizon", e_horizon, "per-sample classification horizon");
    cmd_estimate->add_option("-o,--out", e_out, "output base name");

    // --- transform ---
    auto* cmd_transform = app.add_subcommand("transform", "machine and rule transforms");
    std::string t_kind, t_machine, t_rule, t_out = "out";
    std::vector<std::string> t_rules;
    std::vector<std::size_t> t_parts;
    cmd_transform->add_option("what", t_kind, "nocycle | fully-compute | minima | monotone | compose")
        ->required()
        ->check(CLI::IsMember({"nocycle", "fully-compute", "minima", "monotone", "compose"}));
    cmd_transform->add_option("--machine", t_machine, "machine file or builtin name");
    cmd_transform->add_option("--rule", t_rule, "rule file (monotone)");
    cmd_transform->add_option("--rules", t_rules, "rule files (compose)");
    cmd_transform->add_option("--parts", t_parts, "tag counts per component (compose)");
    cmd_transform->add_option("-o,--out", t_out, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_compile) {
            cagrow::TuringMachineSpec m = load_machine(c_machine);
            if (!c_no_conventions) {
                auto rep = cagrow::check_conventions(m);
                if (!rep.ok()) {
                    std::cerr << "convention violations:\n" << rep.to_string();
                    return kExitConvention;
                }
            }
            cagrow::CaRulePtr rule;
            if (c_mode == "simulate") {
                rule = cagrow::compile_simulating(m, false);
            } else {
                auto acc = cagrow::compute_acceptable_sites(m, c_budget);
                if (!acc.saturated) {
                    std::cerr << "acceptable-site set unsaturated after " << acc.budget_used
                              << " steps\n";
                    return kExitBudget;
                }
                rule = cagrow::compile_dominating(m, acc);
            }
            write_file(c_out, cagrow::serialize_rule(*rule));
            emit_config(c_out, {{"command", "compile"},
                                {"machine", c_machine},
                                {"mode", c_mode},
                                {"budget", std::to_string(c_budget)},
                                {"out", c_out}});
            std::cout << "wrote " << c_out << '\n';
            return 0;
        }
        if (*cmd_run) {
            auto rule = load_rule(r_rule);
            auto input = load_input(rule->alphabet(), r_input, r_input_file);
            auto capture = (r_emit == "trace") ? cagrow::Capture::growth_only : cagrow::Capture::full;
            auto trace = cagrow::ca_run(*rule, input, r_steps, capture);
            if (r_emit != "diagram") write_file(r_out + ".csv", growth_trace_csv(trace.growth));
            if (r_emit != "trace") {
                write_file(r_out + ".txt", cagrow::diagram_text(trace));
                write_file(r_out + ".pgm", cagrow::diagram_pgm(trace));
            }
            emit_config(r_out, {{"command", "run"},
                                {"rule", r_rule},
                                {"input", cagrow::format_configuration(input)},
                                {"steps", std::to_string(r_steps)},
                                {"emit", r_emit}});
            if (trace.growth.truncated) {
                std::cerr << "budget exceeded: trace truncated\n";
                return kExitBudget;
            }
            std::cout << "wrote " << r_out << ".csv\n";
            return 0;
        }
        if (*cmd_classify) {
            auto rule = load_rule(k_rule);
            auto input = load_input(rule->alphabet(), k_input, k_input_file);
            auto verdict = cagrow::classify_pair(*rule, input, k_horizon);
            std::cout << verdict.summary() << '\n';
            if (k_certificate && verdict.certificate) {
                std::cout << "certificate: t1=" << verdict.certificate->t1
                          << " t2=" << verdict.certificate->t2
                          << " shift=" << verdict.certificate->shift << " verified="
                          << (verify_certificate(*rule, input, verdict) ? "yes" : "no") << '\n';
            }
            return verdict.unknown() ? kExitUnknown : 0;
        }
        if (*cmd_estimate) {
            auto rule = load_rule(e_rule);
            auto dist = cagrow::estimate_class_distribution(*rule, e_n, e_samples, e_seed,
                                                            e_horizon);
            std::string csv = cagrow::distribution_csv(dist);
            write_file(e_out + ".csv", csv);
            emit_config(e_out, {{"command", "estimate"},
                                {"rule", e_rule},
                                {"length", std::to_string(e_n)},
                                {"samples", std::to_string(e_samples)},
                                {"seed", std::to_string(e_seed)},
                                {"horizon", std::to_string(e_horizon)},
                                {"exhaustive", dist.exhaustive ? "yes" : "no"}});
            std::cout << csv;
            if (dist.exhaustive) std::cout << "# exhaustive enumeration\n";
            return 0;
        }
        if (*cmd_transform) {
            if (t_kind == "monotone") {
                auto rule = load_rule(t_rule);
                write_file(t_out, cagrow::serialize_rule(*cagrow::make_monotone(rule)));
            } else if (t_kind == "compose") {
                if (t_rules.size() != t_parts.size() || t_rules.empty())
                    throw std::invalid_argument("--rules and --parts must list one entry per component");
                std::vector<cagrow::CaRulePtr> comps;
                for (const auto& p : t_rules) comps.push_back(load_rule(p));
                auto rule = cagrow::compose(std::move(comps), cagrow::TagPartition::sized(t_parts));
                write_file(t_out, cagrow::serialize_rule(*rule));
            } else {
                cagrow::TuringMachineSpec m = load_machine(t_machine);
                cagrow::TuringMachineSpec out = t_kind == "nocycle" ? cagrow::make_nocycle(m)
                                                : t_kind == "minima"
                                                    ? cagrow::make_minima_machine(m)
                                                    : cagrow::make_fully_compute(m);
                write_file(t_out, cagrow::format_machine(out));
            }
            std::cout << "wrote " << t_out << '\n';
            return 0;
        }
    } catch (const cagrow::ConventionError& e) {
        std::cerr << e.what() << '\n';
        return kExitConvention;
    } catch (const cagrow::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 0;
}
