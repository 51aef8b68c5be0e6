// Acceptance suite: one pass/fail line per criterion. argv[1] is the path to
// the ccx binary (used by the error-model criterion).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "ccx/emitter.hpp"
#include "ccx/parser.hpp"
#include "ccx/pipeline.hpp"
#include "ccx/simulator.hpp"
#include "ccx/templates.hpp"

using namespace ccx;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

Crn compile_or_die(const std::string& src) {
    auto result = compile_source(src);
    if (auto* diags = std::get_if<std::vector<Diagnostic>>(&result)) {
        std::cerr << "acceptance setup: failed to compile " << src << ": "
                  << diags->front().message << "\n";
        std::exit(2);
    }
    return std::move(std::get<CompiledProgram>(result).code.crn);
}

CompileResult compile_result_or_die(const std::string& src) {
    auto result = compile_source(src);
    if (std::holds_alternative<std::vector<Diagnostic>>(result)) {
        std::cerr << "acceptance setup: failed to compile " << src << "\n";
        std::exit(2);
    }
    return std::move(std::get<CompiledProgram>(result).code);
}

int count_final(const Crn& crn, const std::string& name, Count expect, int runs,
                std::uint64_t seed, double horizon = 5000.0) {
    int hits = 0;
    int target = crn.find_species(name);
    for (int i = 0; i < runs; ++i) {
        SimConfig config;
        config.seed = seed + i;
        config.horizon = horizon;
        Trajectory traj = simulate(crn, config);
        if (traj.stop == StopReason::Quiescent && traj.final_state[target] == expect) ++hits;
    }
    return hits;
}

// --- criterion 1: copy convergence ------------------------------------------

Outcome copy_convergence() {
    auto t0 = std::chrono::steady_clock::now();
    Crn crn = compile_or_die("x = 10;");
    int hits = count_final(crn, "x", 10, 100, 1000);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << "final x=10 in " << hits << "/100 runs (need >=95), " << secs << " s (need <30)";
    return {hits >= 95 && secs < 30.0, os.str()};
}

// --- criterion 2: decrement --------------------------------------------------

Outcome decrement() {
    Crn crn = compile_or_die("x = 20;\nx = x - 1;\n");
    int hits = count_final(crn, "x", 19, 100, 2000);
    std::ostringstream os;
    os << "final x=19 in " << hits << "/100 runs (need >=95)";
    return {hits >= 95, os.str()};
}

// --- criterion 3: multiplication ----------------------------------------------

Outcome multiplication() {
    Crn mul = compile_or_die("z = 2 * 3;");
    int hits = count_final(mul, "z", 6, 100, 3000);
    Crn zero = compile_or_die("z = 0 * 5;");
    int zero_hits = count_final(zero, "z", 0, 100, 4000);
    std::ostringstream os;
    os << "z=6 in " << hits << "/100 (need >=90); z=0 in " << zero_hits << "/100 (need >=95)";
    return {hits >= 90 && zero_hits >= 95, os.str()};
}

// --- criterion 4: monus subtraction --------------------------------------------

Outcome monus() {
    const std::string src = "x = 5;\ny = 7;\nz = x - y;\n";
    Crn crn = compile_or_die(src);
    int hits = count_final(crn, "z", 0, 100, 5000);
    Env env = std::get<Env>(interpret_source(src));
    bool interp_ok = env.at("x") == 5 && env.at("y") == 7 && env.at("z") == 0;
    std::ostringstream os;
    os << "z=0 in " << hits << "/100 (need >=95); interpreter z=" << env.at("z");
    return {hits >= 95 && interp_ok, os.str()};
}

// --- criterion 5: comparison template -------------------------------------------

Outcome comparison() {
    auto survivors = [](Count a0, Count b0, const std::string& keep, std::uint64_t seed) {
        Crn crn;
        TemplateBuilder builder(crn);
        int a = crn.add_species("a", a0, SpeciesKind::Register);
        int b = crn.add_species("b", b0, SpeciesKind::Register);
        builder.instantiate_compare(a, b);
        int hits = 0;
        for (int i = 0; i < 100; ++i) {
            SimConfig config;
            config.seed = seed + i;
            Trajectory traj = simulate(crn, config);
            auto count = [&](const char* name) {
                return traj.final_state[crn.find_species(name)];
            };
            Count t1 = count("t1_1"), t2 = count("t2_1"), t3 = count("t3_1");
            bool ok = traj.stop == StopReason::Quiescent;
            if (keep == "t1") ok = ok && t1 == 1 && t2 == 0 && t3 == 0;
            if (keep == "t3") ok = ok && t3 == 1 && t1 == 0 && t2 == 0;
            if (ok) ++hits;
        }
        return hits;
    };
    int less = survivors(3, 5, "t3", 6000);
    int equal = survivors(4, 4, "t1", 7000);
    std::ostringstream os;
    os << "a=3,b=5 -> t3 in " << less << "/100; a=b=4 -> t1 in " << equal
       << "/100 (need >=90 each)";
    return {less >= 90 && equal >= 90, os.str()};
}

// --- criterion 6: differential fuzzing -------------------------------------------

struct GenState {
    std::mt19937_64 rng;
    std::vector<std::string> vars;
    Env env;
    bool ok = true;

    explicit GenState(std::uint64_t seed) : rng(seed) {}

    long long pick_leaf(std::string& text) {
        if (!vars.empty() && rng() % 10 < 3) {
            const std::string& name = vars[rng() % vars.size()];
            text = name;
            return env.at(name);
        }
        long long v = static_cast<long long>(rng() % 11);  // literals <= 10
        text = std::to_string(v);
        return v;
    }

    long long gen_expr(std::string& text, int depth) {
        int shape = static_cast<int>(rng() % 10);
        if (depth >= 2 || shape < 3) return pick_leaf(text);
        std::string lt, rt;
        long long lv = gen_expr(lt, depth + 1);
        long long rv = gen_expr(rt, depth + 1);
        const char* ops[] = {"+", "-", "*"};
        const char* op = ops[rng() % 3];
        text = "(" + lt + " " + op + " " + rt + ")";
        long long value = 0;
        if (op[0] == '+') value = lv + rv;
        if (op[0] == '-') value = lv > rv ? lv - rv : 0;
        if (op[0] == '*') {
            value = lv * rv;
            if (lv > 6) ok = false;  // keeps the loop count at desk scale
        }
        if (value > 60) ok = false;
        return value;
    }
};

std::optional<std::string> generate_program(std::uint64_t seed) {
    GenState gen(seed);
    std::ostringstream src;
    int stmts = 1 + static_cast<int>(gen.rng() % 5);
    const char* names[] = {"a", "b", "c", "d", "e"};
    for (int s = 0; s < stmts; ++s) {
        std::string target;
        if (!gen.vars.empty() && gen.rng() % 10 < 3)
            target = gen.vars[gen.rng() % gen.vars.size()];
        else if (gen.vars.size() < 5)
            target = names[gen.vars.size()];
        else
            target = gen.vars[gen.rng() % gen.vars.size()];
        std::string expr;
        long long value = gen.gen_expr(expr, 0);
        if (!gen.ok) return std::nullopt;
        if (std::find(gen.vars.begin(), gen.vars.end(), target) == gen.vars.end())
            gen.vars.push_back(target);
        gen.env[target] = value;
        src << target << " = " << expr << ";\n";
    }
    return src.str();
}

Outcome differential_fuzz() {
    std::uint64_t gen_seed = 90'000;
    int programs_ok = 0;
    int generated = 0;
    std::vector<std::string> failures;
    while (generated < 100) {
        auto src = generate_program(gen_seed++);
        if (!src) continue;
        ++generated;

        Env env = std::get<Env>(interpret_source(*src));
        Crn crn = compile_or_die(*src);
        SimConfig config;
        config.seed = 10'000 + static_cast<std::uint64_t>(generated) * 1000;
        config.horizon = 30'000.0;
        EnsembleSummary summary = run_ensemble(crn, config, 30);

        bool match = summary.modal_fraction >= 0.9;
        for (size_t k = 0; match && k < summary.observed.size(); ++k)
            match = summary.modal_state[k] == env.at(summary.observed[k]);
        if (match) ++programs_ok;
        else if (failures.size() < 3) failures.push_back(*src);
    }
    std::ostringstream os;
    os << programs_ok << "/100 programs matched the interpreter with modal fraction >=0.9 "
       << "(need >=95)";
    for (const auto& f : failures) {
        std::string squashed = f;
        for (char& c : squashed)
            if (c == '\n') c = ' ';
        os << " | miss: " << squashed;
    }
    return {programs_ok >= 95, os.str()};
}

// --- criterion 7: rate-independence invariant --------------------------------------

Outcome rate_rescaling() {
    Crn crn = compile_or_die("x = 10;");
    std::vector<int> fired_a, fired_b;
    std::vector<double> times_a, times_b;
    SimConfig base;
    base.seed = 77;
    simulate(crn, base, [&](int r, double t) {
        fired_a.push_back(r);
        times_a.push_back(t);
    });
    SimConfig doubled = base;
    doubled.rates.fast *= 2.0;
    doubled.rates.slow *= 2.0;
    doubled.rates.veryslow *= 2.0;
    simulate(crn, doubled, [&](int r, double t) {
        fired_b.push_back(r);
        times_b.push_back(t);
    });
    bool same_sequence = fired_a == fired_b;
    bool halved = times_a.size() == times_b.size();
    for (size_t i = 0; halved && i < times_a.size(); ++i)
        halved = times_b[i] == times_a[i] / 2.0;
    std::ostringstream os;
    os << times_a.size() << " firings; sequences " << (same_sequence ? "identical" : "DIFFER")
       << "; event times " << (halved ? "exactly halved" : "NOT halved");
    return {same_sequence && halved && !times_a.empty(), os.str()};
}

// --- criterion 8: SSA correctness oracle ----------------------------------------

Outcome ssa_oracle() {
    Crn decay;
    int a = decay.add_species("a", 3, SpeciesKind::UserVariable);
    decay.add_reaction({{a, 1}}, {}, RateTier::Slow, false, "decay");
    double total = 0.0;
    const int runs = 10'000;
    for (int i = 0; i < runs; ++i) {
        SimConfig config;
        config.seed = 40'000 + static_cast<std::uint64_t>(i);
        total += simulate(decay, config).final_time;
    }
    double mean = total / runs;
    const double expected = 1.0 / 3.0 + 1.0 / 2.0 + 1.0;  // 11/6
    double rel = std::abs(mean - expected) / expected;

    Crn dimer;
    int b = dimer.add_species("b", 4, SpeciesKind::UserVariable);
    dimer.add_reaction({{b, 2}}, {{b, 1}}, RateTier::Slow, false, "dimer");
    double a0 = propensity(dimer.reactions[0], dimer.initial_state(), RateConfig{});

    std::ostringstream os;
    os << "mean extinction " << mean << " vs 11/6 (rel err " << rel
       << ", need <0.05); dimer propensity " << a0 << " (need ==6)";
    return {rel < 0.05 && a0 == 6.0, os.str()};
}

// --- criterion 9: emitter round trip + structural counts ---------------------------

Outcome emitter_round_trip() {
    const char* programs[] = {
        "x = 10;",
        "x = 20;\nx = x - 1;\n",
        "z = 2 * 3;",
        "z = 0 * 5;",
        "x = 5;\ny = 7;\nz = x - y;\n",
        "x = 2;\ny = x;\n",
        "a = 2 + 3 * 4;\nb = a - 1;\nc = b * 2;\n",
    };
    int round_trips = 0, structural = 0, total_modules = 0;
    for (const char* src : programs) {
        CompileResult code = compile_result_or_die(src);
        RateConfig rates;
        std::string first = emit_cain_xml(code.crn, rates);
        auto parsed = parse_cain_xml(first);
        if (std::holds_alternative<Diagnostic>(parsed)) continue;
        const ParsedModel& model = std::get<ParsedModel>(parsed);
        if (emit_cain_xml(model.crn, model.rates) == first) ++round_trips;

        bool counts_ok = true;
        for (const auto& m : code.modules) {
            ++total_modules;
            int templ = 0;
            for (int id : m.reactions)
                if (code.crn.reactions[id].label.find(".link.") == std::string::npos) ++templ;
            int expected = -1;
            switch (m.kind) {
                case ModuleKind::Clear: expected = 5; break;
                case ModuleKind::Copy: expected = 5; break;
                case ModuleKind::Inc:
                case ModuleKind::Dec: expected = 7; break;
                case ModuleKind::Compare: expected = 10; break;
                case ModuleKind::Subtract: expected = 1; break;
                case ModuleKind::Multiply: expected = 0; break;  // wiring only
            }
            std::string prefix = std::string(module_kind_name(m.kind)) + "." +
                                 std::to_string(m.index) + ".";
            bool labels_ok = true;
            for (int id : m.reactions)
                labels_ok = labels_ok && code.crn.reactions[id].label.rfind(prefix, 0) == 0;
            if (templ != expected || !labels_ok) counts_ok = false;
        }
        if (counts_ok) ++structural;
    }
    std::ostringstream os;
    os << round_trips << "/7 byte-identical round trips; " << structural
       << "/7 programs with exact template counts over " << total_modules << " modules";
    return {round_trips == 7 && structural == 7, os.str()};
}

// --- criterion 10: error model via the CLI ------------------------------------------

struct CliResult {
    int exit_code;
    std::string stderr_text;
};

std::optional<CliResult> run_cli(const std::string& ccx, const std::string& source_text,
                                 const std::string& dir, const std::string& name) {
    std::string path = dir + "/" + name;
    std::ofstream out(path);
    if (!out) return std::nullopt;
    out << source_text;
    out.close();
    std::string cmd = ccx + " compile " + path + " -o " + dir + "/out.xml 2>&1 >/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return std::nullopt;
    std::string text;
    char buf[256];
    while (fgets(buf, sizeof buf, pipe)) text += buf;
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return CliResult{code, text};
}

Outcome error_model(const std::string& ccx) {
    char tmpl[] = "/tmp/ccx-acceptance-XXXXXX";
    const char* dir = mkdtemp(tmpl);
    if (!dir) return {false, "cannot create temp dir"};

    auto missing = run_cli(ccx, "x = 10;\ny = 20\nz = x + y;\n", dir, "missing_semi.ccx");
    bool a = missing && missing->exit_code == 1 &&
             missing->stderr_text == "syntax error at/near line 2\n";

    auto undeclared = run_cli(ccx, "y = x;\n", dir, "undeclared.ccx");
    bool b = undeclared && undeclared->exit_code == 1 &&
             undeclared->stderr_text == "undeclared variable 'x' at line 1\n";

    auto decimal = run_cli(ccx, "x = 20.22;\n", dir, "decimal.ccx");
    bool c = decimal && decimal->exit_code == 1 &&
             decimal->stderr_text == "syntax error at/near line 1\n";

    std::ostringstream os;
    os << "missing ';' " << (a ? "ok" : "BAD") << "; undeclared " << (b ? "ok" : "BAD")
       << "; decimal literal " << (c ? "ok" : "BAD");
    return {a && b && c, os.str()};
}

// --- criterion 11: precedence & associativity ----------------------------------------

Outcome precedence_property() {
    std::mt19937_64 rng(314);
    int checked = 0;
    bool all_ok = true;

    Program keep;
    auto shape = [&](const std::string& src) -> const BinExpr* {
        auto parsed = parse_source(src);
        if (!std::holds_alternative<Program>(parsed)) return nullptr;
        keep = std::move(std::get<Program>(parsed));
        const auto& assign = std::get<AssignStmt>(keep.stmts.at(0).node);
        return std::get_if<BinExpr>(&assign.value->node);
    };

    const char* adds[] = {"+", "-"};
    const char* muls[] = {"*", "/"};
    const char* cmps[] = {"<", ">", "<=", ">=", "==", "!="};

    for (int round = 0; round < 200 && all_ok; ++round) {
        std::string d1 = std::to_string(rng() % 50);
        std::string d2 = std::to_string(rng() % 50);
        std::string d3 = std::to_string(rng() % 50);
        std::string o1 = adds[rng() % 2], o2 = muls[rng() % 2];

        // mul/div binds tighter than add/sub in both operand orders.
        const BinExpr* left = shape("x = " + d1 + " " + o1 + " " + d2 + " " + o2 + " " + d3 + ";");
        all_ok = all_ok && left && binop_symbol(left->op) == o1 &&
                 std::holds_alternative<BinExpr>(left->rhs->node) &&
                 binop_symbol(std::get<BinExpr>(left->rhs->node).op) == o2;

        const BinExpr* right = shape("x = " + d1 + " " + o2 + " " + d2 + " " + o1 + " " + d3 + ";");
        all_ok = all_ok && right && binop_symbol(right->op) == o1 &&
                 std::holds_alternative<BinExpr>(right->lhs->node) &&
                 binop_symbol(std::get<BinExpr>(right->lhs->node).op) == o2;

        // comparisons bind loosest.
        std::string c = cmps[rng() % 6];
        const BinExpr* cmp = shape("x = " + d1 + " " + o1 + " " + d2 + " " + c + " " + d3 + ";");
        all_ok = all_ok && cmp && binop_symbol(cmp->op) == c;

        // same-precedence chains associate left: the root is the second op.
        std::string oa = adds[rng() % 2], ob = adds[rng() % 2];
        const BinExpr* assoc = shape("x = " + d1 + " " + oa + " " + d2 + " " + ob + " " + d3 + ";");
        all_ok = all_ok && assoc && binop_symbol(assoc->op) == ob &&
                 std::holds_alternative<BinExpr>(assoc->lhs->node) &&
                 binop_symbol(std::get<BinExpr>(assoc->lhs->node).op) == oa;

        std::string ma = muls[rng() % 2], mb = muls[rng() % 2];
        const BinExpr* massoc = shape("x = " + d1 + " " + ma + " " + d2 + " " + mb + " " + d3 + ";");
        all_ok = all_ok && massoc && binop_symbol(massoc->op) == mb;

        checked += 5;
    }
    std::ostringstream os;
    os << checked << " generated expressions with the expected AST shapes";
    return {all_ok && checked == 1000, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
    std::string ccx = argc > 1 ? argv[1] : "./ccx";

    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const Entry entries[] = {
        {1, "copy convergence (x = 10)", copy_convergence},
        {2, "decrement (x = 20; x = x - 1)", decrement},
        {3, "multiplication (2 * 3 and 0 * 5)", multiplication},
        {4, "monus subtraction (5 - 7)", monus},
        {5, "comparison template outcomes", comparison},
        {6, "differential fuzzing (100 programs)", differential_fuzz},
        {7, "rate-independence rescaling invariant", rate_rescaling},
        {8, "SSA correctness oracle", ssa_oracle},
        {9, "emitter round trip and template counts", emitter_round_trip},
        {10, "error model", [&] { return error_model(ccx); }},
        {11, "precedence and associativity", precedence_property},
    };

    int failures = 0;
    for (const auto& entry : entries) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome outcome = entry.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %2d: %s -- %s [%.1fs]\n", outcome.pass ? "PASS" : "FAIL",
                    entry.id, entry.name, outcome.detail.c_str(), secs);
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    }
    if (failures)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all 11 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
