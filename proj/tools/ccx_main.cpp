#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ccx/emitter.hpp"
#include "ccx/lexer.hpp"
#include "ccx/parser.hpp"
#include "ccx/pipeline.hpp"
#include "ccx/simulator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitEnvironment = 2;

void print_diagnostics(const std::vector<ccx::Diagnostic>& diags) {
    for (const auto& d : diags) std::cerr << d.message << "\n";
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return bool(out);
}

std::string swap_extension(const std::string& path, const std::string& ext) {
    size_t slash = path.find_last_of('/');
    size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + ext;
    return path.substr(0, dot) + ext;
}

struct RateFlags {
    double fast = -1, slow = -1, veryslow = -1;

    ccx::RateConfig resolve() const {
        ccx::RateConfig rates;
        if (fast > 0) rates.fast = fast;
        if (slow > 0) rates.slow = slow;
        if (veryslow > 0) rates.veryslow = veryslow;
        return rates;
    }
};

void add_rate_flags(CLI::App* cmd, RateFlags& flags) {
    cmd->add_option("--fast", flags.fast, "fast tier rate constant");
    cmd->add_option("--slow", flags.slow, "slow tier rate constant");
    cmd->add_option("--veryslow", flags.veryslow, "veryslow tier rate constant");
}

int cmd_compile(const std::string& source_path, const std::string& output_path,
                const std::string& emit, const RateFlags& rate_flags) {
    auto source = read_file(source_path);
    if (!source) {
        std::cerr << "cannot read " << source_path << "\n";
        return kExitEnvironment;
    }
    ccx::RateConfig rates = rate_flags.resolve();
    if (!rates.valid()) {
        std::cerr << "rate tiers must satisfy fast > slow > veryslow > 0\n";
        return kExitDiagnostics;
    }

    if (emit == "tokens") {
        ccx::TokenizeResult toks = ccx::tokenize(*source);
        if (auto* diag = std::get_if<ccx::Diagnostic>(&toks)) {
            std::cerr << diag->message << "\n";
            return kExitDiagnostics;
        }
        std::ostringstream os;
        for (const auto& t : std::get<std::vector<ccx::Token>>(toks))
            os << t.line << ":" << ccx::token_kind_name(t.kind) << ":" << t.lexeme << "\n";
        if (output_path.empty()) {
            std::cout << os.str();
            return kExitOk;
        }
        if (!write_file(output_path, os.str())) {
            std::cerr << "cannot write " << output_path << "\n";
            return kExitEnvironment;
        }
        return kExitOk;
    }

    if (emit == "ast") {
        ccx::ParseResult parsed = ccx::parse_source(*source);
        if (auto* diag = std::get_if<ccx::Diagnostic>(&parsed)) {
            std::cerr << diag->message << "\n";
            return kExitDiagnostics;
        }
        std::string tree = ccx::dump_tree(std::get<ccx::Program>(parsed));
        if (output_path.empty()) {
            std::cout << tree;
            return kExitOk;
        }
        if (!write_file(output_path, tree)) {
            std::cerr << "cannot write " << output_path << "\n";
            return kExitEnvironment;
        }
        return kExitOk;
    }

    ccx::CompileSourceResult compiled = ccx::compile_source(*source, rates);
    if (auto* diags = std::get_if<std::vector<ccx::Diagnostic>>(&compiled)) {
        print_diagnostics(*diags);
        return kExitDiagnostics;
    }
    const ccx::Crn& crn = std::get<ccx::CompiledProgram>(compiled).code.crn;
    auto issues = crn.validate(true);
    if (!issues.empty()) {
        for (const auto& issue : issues)
            std::cerr << "internal error (" << issue.label << "): " << issue.message << "\n";
        return kExitDiagnostics;
    }

    std::string payload;
    std::string default_ext;
    if (emit == "crn") {
        payload = ccx::emit_crn_text(crn);
        default_ext = ".crn";
    } else {
        payload = ccx::emit_cain_xml(crn, rates);
        default_ext = ".xml";
    }
    std::string path = output_path.empty() ? swap_extension(source_path, default_ext) : output_path;
    if (path == "-") {
        std::cout << payload;
        return kExitOk;
    }
    if (!write_file(path, payload)) {
        std::cerr << "cannot write " << path << "\n";
        return kExitEnvironment;
    }
    return kExitOk;
}

int cmd_run(const std::string& source_path, int runs, std::uint64_t seed, double horizon,
            const std::string& trace_path, const std::vector<std::string>& observe,
            const RateFlags& rate_flags) {
    auto source = read_file(source_path);
    if (!source) {
        std::cerr << "cannot read " << source_path << "\n";
        return kExitEnvironment;
    }
    ccx::RateConfig rates = rate_flags.resolve();
    if (!rates.valid()) {
        std::cerr << "rate tiers must satisfy fast > slow > veryslow > 0\n";
        return kExitDiagnostics;
    }
    ccx::CompileSourceResult compiled = ccx::compile_source(*source, rates);
    if (auto* diags = std::get_if<std::vector<ccx::Diagnostic>>(&compiled)) {
        print_diagnostics(*diags);
        return kExitDiagnostics;
    }
    const ccx::Crn& crn = std::get<ccx::CompiledProgram>(compiled).code.crn;

    ccx::SimConfig config;
    config.seed = seed;
    config.horizon = horizon;
    config.rates = rates;
    config.observe = observe;
    for (const auto& name : observe) {
        if (crn.find_species(name) < 0) {
            std::cerr << "unknown observable '" << name << "'\n";
            return kExitDiagnostics;
        }
    }

    if (!trace_path.empty()) {
        ccx::Trajectory traj = ccx::simulate(crn, config);
        auto csv = ccx::write_trace_csv(traj, {});
        if (auto* diag = std::get_if<ccx::Diagnostic>(&csv)) {
            std::cerr << diag->message << "\n";
            return kExitDiagnostics;
        }
        if (!write_file(trace_path, std::get<std::string>(csv))) {
            std::cerr << "cannot write " << trace_path << "\n";
            return kExitEnvironment;
        }
    }

    ccx::EnsembleSummary summary = ccx::run_ensemble(crn, config, runs);
    std::cout << ccx::format_summary(summary);
    return kExitOk;
}

int cmd_interpret(const std::string& source_path) {
    auto source = read_file(source_path);
    if (!source) {
        std::cerr << "cannot read " << source_path << "\n";
        return kExitEnvironment;
    }
    ccx::ParseResult parsed = ccx::parse_source(*source);
    if (auto* diag = std::get_if<ccx::Diagnostic>(&parsed)) {
        std::cerr << diag->message << "\n";
        return kExitDiagnostics;
    }
    const ccx::Program& program = std::get<ccx::Program>(parsed);
    ccx::AnalyzeResult analyzed = ccx::analyze(program);
    if (auto* diags = std::get_if<std::vector<ccx::Diagnostic>>(&analyzed)) {
        print_diagnostics(*diags);
        return kExitDiagnostics;
    }
    ccx::InterpretResult result = ccx::interpret(program);
    if (auto* diag = std::get_if<ccx::Diagnostic>(&result)) {
        std::cerr << diag->message << "\n";
        return kExitDiagnostics;
    }
    const ccx::Env& env = std::get<ccx::Env>(result);
    for (const auto& name : std::get<ccx::SymbolTable>(analyzed).names()) {
        auto it = env.find(name);
        if (it != env.end()) std::cout << name << " = " << it->second << "\n";
    }
    return kExitOk;
}

int cmd_repl() {
    ccx::ReplParser parser;
    ccx::Env env;
    ccx::CodegenSession session;
    std::string line;

    std::cout << "ccx> " << std::flush;
    while (std::getline(std::cin, line)) {
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
        if (trimmed == "exit" && !parser.pending()) return kExitOk;

        ccx::ReplParser::FeedResult fed = parser.feed(line);
        if (auto* diag = std::get_if<ccx::Diagnostic>(&fed)) {
            std::cerr << diag->message << "\n";
        } else if (auto* stmts = std::get_if<std::vector<ccx::Stmt>>(&fed)) {
            for (const auto& stmt : *stmts) {
                // Undeclared uses are checked against the live environment.
                ccx::Program single;
                single.stmts.push_back(clone(stmt));
                ccx::SymbolTable known;
                for (const auto& [name, value] : env) known.declare(name, 0);
                ccx::AnalyzeResult checked = ccx::analyze(single, std::move(known));
                if (auto* diags = std::get_if<std::vector<ccx::Diagnostic>>(&checked)) {
                    print_diagnostics(*diags);
                    continue;
                }
                auto outcome = ccx::interpret_stmt(stmt, env);
                if (auto* diag = std::get_if<ccx::Diagnostic>(&outcome)) {
                    std::cerr << diag->message << "\n";
                    continue;
                }
                if (const auto* assign = std::get_if<ccx::AssignStmt>(&stmt.node)) {
                    std::cout << assign->target << " = " << env[assign->target] << "\n";
                    if (ccx::check_supported(stmt).empty()) {
                        auto [first, last] = session.add_stmt(stmt);
                        const ccx::Crn& crn = session.crn();
                        for (int r = first; r < last; ++r) {
                            const ccx::Reaction& rx = crn.reactions[r];
                            std::ostringstream os;
                            os << rx.label << ": ";
                            auto side = [&](const ccx::SpeciesCoefs& coefs) {
                                if (coefs.empty()) {
                                    os << "0";
                                    return;
                                }
                                bool head = true;
                                for (const auto& [id, stoich] : coefs) {
                                    if (!head) os << " + ";
                                    head = false;
                                    if (stoich != 1) os << stoich << " ";
                                    os << crn.species[id].name;
                                }
                            };
                            side(rx.reactants);
                            os << " ->" << ccx::rate_tier_name(rx.tier) << " ";
                            side(rx.products);
                            std::cout << os.str() << "\n";
                        }
                    }
                }
            }
        }
        std::cout << "ccx> " << std::flush;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chemical compiler: python-like integer programs to CAIN reaction networks"};
    app.require_subcommand(1);

    std::string source_path, output_path, emit = "xml", trace_path;
    int runs = 10;
    std::uint64_t seed = 1;
    double horizon = 5000.0;
    std::vector<std::string> observe;
    RateFlags compile_rates, run_rates;

    CLI::App* compile = app.add_subcommand("compile", "compile a source file");
    compile->add_option("source", source_path, "source file (.ccx)")->required();
    compile->add_option("-o,--output", output_path, "output path ('-' for stdout)");
    compile->add_option("--emit", emit, "tokens | ast | crn | xml")
        ->check(CLI::IsMember({"tokens", "ast", "crn", "xml"}));
    add_rate_flags(compile, compile_rates);

    CLI::App* run = app.add_subcommand("run", "compile and simulate an ensemble");
    run->add_option("source", source_path, "source file (.ccx)")->required();
    run->add_option("--runs", runs, "trajectories in the ensemble")->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "base RNG seed");
    run->add_option("--horizon", horizon, "simulated time horizon");
    run->add_option("--trace", trace_path, "write run 0 trace CSV here");
    run->add_option("--observe", observe, "species to report (default: program variables)");
    add_rate_flags(run, run_rates);

    CLI::App* interpret = app.add_subcommand("interpret", "run the reference interpreter");
    interpret->add_option("source", source_path, "source file (.ccx)")->required();

    app.add_subcommand("repl", "interactive mode");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (app.got_subcommand("compile"))
            return cmd_compile(source_path, output_path, emit, compile_rates);
        if (app.got_subcommand("run"))
            return cmd_run(source_path, runs, seed, horizon, trace_path, observe, run_rates);
        if (app.got_subcommand("interpret")) return cmd_interpret(source_path);
        return cmd_repl();
    } catch (const std::bad_alloc&) {
        std::cerr << "insufficient memory\n";
        return kExitEnvironment;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitEnvironment;
    }
}
