#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "ccx/emitter.hpp"
#include "ccx/lexer.hpp"
#include "ccx/parser.hpp"
#include "ccx/pipeline.hpp"
#include "ccx/simulator.hpp"

namespace py = pybind11;

namespace {

[[noreturn]] void raise(const std::vector<ccx::Diagnostic>& diags) {
    std::ostringstream os;
    for (size_t i = 0; i < diags.size(); ++i) {
        if (i) os << "\n";
        os << diags[i].message;
    }
    throw std::invalid_argument(os.str());
}

ccx::RateConfig make_rates(double fast, double slow, double veryslow) {
    ccx::RateConfig rates{fast, slow, veryslow};
    if (!rates.valid())
        throw std::invalid_argument("rate tiers must satisfy fast > slow > veryslow > 0");
    return rates;
}

ccx::CompiledProgram compile_or_raise(const std::string& source, const ccx::RateConfig& rates) {
    ccx::CompileSourceResult result = ccx::compile_source(source, rates);
    if (auto* diags = std::get_if<std::vector<ccx::Diagnostic>>(&result)) raise(*diags);
    return std::move(std::get<ccx::CompiledProgram>(result));
}

}  // namespace

PYBIND11_MODULE(ccx, m) {
    m.doc() = "chemical compiler: python-like integer programs to stochastic reaction networks";

    m.def(
        "tokenize",
        [](const std::string& source) {
            ccx::TokenizeResult result = ccx::tokenize(source);
            if (auto* diag = std::get_if<ccx::Diagnostic>(&result))
                throw std::invalid_argument(diag->message);
            py::list out;
            for (const auto& t : std::get<std::vector<ccx::Token>>(result))
                out.append(py::make_tuple(t.line, ccx::token_kind_name(t.kind), t.lexeme));
            return out;
        },
        py::arg("source"), "Token list as (line, kind, lexeme) tuples.");

    m.def(
        "parse_tree",
        [](const std::string& source) {
            ccx::ParseResult result = ccx::parse_source(source);
            if (auto* diag = std::get_if<ccx::Diagnostic>(&result))
                throw std::invalid_argument(diag->message);
            return ccx::dump_tree(std::get<ccx::Program>(result));
        },
        py::arg("source"), "Parenthesized AST listing.");

    m.def(
        "interpret",
        [](const std::string& source) {
            auto result = ccx::interpret_source(source);
            if (auto* diags = std::get_if<std::vector<ccx::Diagnostic>>(&result)) raise(*diags);
            py::dict out;
            for (const auto& [name, value] : std::get<ccx::Env>(result))
                out[py::str(name)] = value;
            return out;
        },
        py::arg("source"), "Reference interpreter; final variable environment.");

    m.def(
        "compile_to_xml",
        [](const std::string& source, double fast, double slow, double veryslow) {
            ccx::RateConfig rates = make_rates(fast, slow, veryslow);
            ccx::CompiledProgram compiled = compile_or_raise(source, rates);
            return ccx::emit_cain_xml(compiled.code.crn, rates);
        },
        py::arg("source"), py::arg("fast") = 1000.0, py::arg("slow") = 1.0,
        py::arg("veryslow") = 0.01, "CAIN model document for the compiled program.");

    m.def(
        "compile_to_text",
        [](const std::string& source) {
            ccx::CompiledProgram compiled = compile_or_raise(source, {});
            return ccx::emit_crn_text(compiled.code.crn);
        },
        py::arg("source"), "Readable reaction listing for the compiled program.");

    m.def(
        "simulate",
        [](const std::string& source, std::uint64_t seed, double horizon) {
            ccx::CompiledProgram compiled = compile_or_raise(source, {});
            ccx::SimConfig config;
            config.seed = seed;
            config.horizon = horizon;
            ccx::Trajectory traj = ccx::simulate(compiled.code.crn, config);
            py::dict finals;
            for (size_t k = 0; k < traj.observed.size(); ++k)
                finals[py::str(traj.observed[k])] = traj.samples.back().counts[k];
            py::dict out;
            out["final"] = finals;
            out["time"] = traj.final_time;
            out["stop"] = ccx::stop_reason_name(traj.stop);
            out["steps"] = traj.steps;
            return out;
        },
        py::arg("source"), py::arg("seed") = 1, py::arg("horizon") = 5000.0,
        "One seeded trajectory; final observable counts and stop reason.");

    m.def(
        "run_ensemble",
        [](const std::string& source, int runs, std::uint64_t seed, double horizon) {
            ccx::CompiledProgram compiled = compile_or_raise(source, {});
            ccx::SimConfig config;
            config.seed = seed;
            config.horizon = horizon;
            ccx::EnsembleSummary summary = ccx::run_ensemble(compiled.code.crn, config, runs);
            py::dict modes;
            py::dict fractions;
            for (size_t k = 0; k < summary.observed.size(); ++k) {
                modes[py::str(summary.observed[k])] = summary.mode_of(k);
                fractions[py::str(summary.observed[k])] = summary.fraction_of_mode(k);
            }
            py::dict out;
            out["mode"] = modes;
            out["fraction"] = fractions;
            out["modal_fraction"] = summary.modal_fraction;
            out["runs"] = summary.runs;
            return out;
        },
        py::arg("source"), py::arg("runs") = 20, py::arg("seed") = 1,
        py::arg("horizon") = 5000.0,
        "Seeded ensemble; per-variable modal final counts and fractions.");
}
