#include "ccx/templates.hpp"

#include <stdexcept>

namespace ccx {

const char* module_kind_name(ModuleKind kind) {
    switch (kind) {
        case ModuleKind::Clear: return "clear";
        case ModuleKind::Copy: return "copy";
        case ModuleKind::Inc: return "inc";
        case ModuleKind::Dec: return "dec";
        case ModuleKind::Compare: return "compare";
        case ModuleKind::Subtract: return "subtract";
        case ModuleKind::Multiply: return "multiply";
    }
    return "?";
}

int const_species(Crn& crn, Count value) {
    std::string plain = "c" + std::to_string(value);
    std::string prefixed = "_" + plain;
    int id = crn.find_species(plain);
    if (id >= 0 && crn.species[id].kind == SpeciesKind::Constant) return id;
    id = crn.find_species(prefixed);
    if (id >= 0) return id;
    // The plain name is free unless a user variable took it first.
    if (crn.find_species(plain) < 0)
        return crn.add_species(plain, value, SpeciesKind::Constant);
    return crn.add_species(prefixed, value, SpeciesKind::Constant);
}

std::string TemplateBuilder::suffixed(const std::string& base, int idx) const {
    return base + "_" + std::to_string(idx);
}

const IndicatorBinding& TemplateBuilder::ensure_indicator(int species_id) {
    auto it = bindings_.find(species_id);
    if (it != bindings_.end()) return it->second;

    const std::string base = crn_.species.at(species_id).name;
    // Present from the start iff the indicated species starts absent.
    Count init = crn_.species[species_id].initial_count == 0 ? 1 : 0;
    int ab = crn_.add_species(base + "_ab", init, SpeciesKind::AbsenceIndicator);

    IndicatorBinding b;
    b.indicated = species_id;
    b.indicator = ab;
    b.generate_rx = crn_.add_reaction({}, {{ab, 1}}, RateTier::Slow, true, "ab." + base + ".g");
    b.consume_rx = crn_.add_reaction({{species_id, 1}, {ab, 1}}, {{species_id, 1}}, RateTier::Fast,
                                     true, "ab." + base + ".c");
    b.cap_rx = crn_.add_reaction({{ab, 2}}, {{ab, 1}}, RateTier::Fast, true, "ab." + base + ".k");
    return bindings_.emplace(species_id, b).first->second;
}

int TemplateBuilder::indicator_of(int species_id) const {
    auto it = bindings_.find(species_id);
    return it == bindings_.end() ? -1 : it->second.indicator;
}

ModuleInstance TemplateBuilder::instantiate_clear(int target) {
    int idx = next_index_++;
    ModuleInstance m;
    m.kind = ModuleKind::Clear;
    m.index = idx;
    m.start = crn_.add_species(suffixed("start", idx), 0, SpeciesKind::SignalStart);
    m.done = crn_.add_species(suffixed("done", idx), 0, SpeciesKind::SignalDone);
    int prime = crn_.add_species(suffixed(crn_.species[target].name + "p", idx), 0,
                                 SpeciesKind::TempPrime);
    m.locals["target"] = target;
    m.locals["var_prime"] = prime;

    int done_ab = ensure_indicator(m.done).indicator;
    int var_ab = ensure_indicator(target).indicator;

    std::string p = std::string(module_kind_name(m.kind)) + "." + std::to_string(idx) + ".";
    auto add = [&](SpeciesCoefs r, SpeciesCoefs pr, RateTier tier, const std::string& ref) {
        m.reactions.push_back(crn_.add_reaction(std::move(r), std::move(pr), tier, false, p + ref));
    };
    add({{m.start, 1}, {target, 1}, {done_ab, 1}}, {{prime, 1}, {m.start, 1}}, RateTier::Slow, "1");
    add({{m.start, 1}, {var_ab, 1}}, {{m.done, 1}}, RateTier::Slow, "2");
    add({{m.done, 2}}, {{m.done, 1}}, RateTier::Fast, "3");
    add({{m.done, 1}, {prime, 1}}, {{m.done, 1}}, RateTier::Slow, "4");
    add({{m.start, 1}, {m.done, 1}}, {{m.done, 1}}, RateTier::Slow, "5");

    instances_.push_back(m);
    return m;
}

ModuleInstance TemplateBuilder::instantiate_copy(int source, int dest) {
    if (source == dest) throw std::invalid_argument("copy source and dest must differ");
    int idx = next_index_++;
    ModuleInstance m;
    m.kind = ModuleKind::Copy;
    m.index = idx;
    m.start = crn_.add_species(suffixed("start", idx), 0, SpeciesKind::SignalStart);
    m.done = crn_.add_species(suffixed("done", idx), 0, SpeciesKind::SignalDone);
    int prime = crn_.add_species(suffixed(crn_.species[source].name + "p", idx), 0,
                                 SpeciesKind::TempPrime);
    m.locals["source"] = source;
    m.locals["dest"] = dest;
    m.locals["var_prime"] = prime;

    int done_ab = ensure_indicator(m.done).indicator;
    int var_ab = ensure_indicator(source).indicator;

    std::string p = std::string(module_kind_name(m.kind)) + "." + std::to_string(idx) + ".";
    auto add = [&](SpeciesCoefs r, SpeciesCoefs pr, RateTier tier, const std::string& ref) {
        m.reactions.push_back(crn_.add_reaction(std::move(r), std::move(pr), tier, false, p + ref));
    };
    add({{m.start, 1}, {source, 1}, {done_ab, 1}}, {{prime, 1}, {m.start, 1}}, RateTier::Slow, "1");
    add({{m.start, 1}, {var_ab, 1}}, {{m.done, 1}}, RateTier::Slow, "2");
    add({{m.done, 2}}, {{m.done, 1}}, RateTier::Fast, "3");
    // Restores the source while producing the output: dest <- dest + source.
    add({{m.done, 1}, {prime, 1}}, {{m.done, 1}, {source, 1}, {dest, 1}}, RateTier::Slow, "4");
    add({{m.start, 1}, {m.done, 1}}, {{m.done, 1}}, RateTier::Slow, "5");

    instances_.push_back(m);
    return m;
}

ModuleInstance TemplateBuilder::instantiate_incdec(int target, bool increment) {
    int idx = next_index_++;
    ModuleInstance m;
    m.kind = increment ? ModuleKind::Inc : ModuleKind::Dec;
    m.index = idx;
    m.start = crn_.add_species(suffixed("start", idx), 0, SpeciesKind::SignalStart);
    m.done = crn_.add_species(suffixed("done", idx), 0, SpeciesKind::SignalDone);
    const std::string vname = crn_.species[target].name;
    int prime = crn_.add_species(suffixed(vname + "p", idx), 0, SpeciesKind::TempPrime);
    int rx = crn_.add_species(suffixed(vname + "rx", idx), 0, SpeciesKind::TempPrime);
    m.locals["target"] = target;
    m.locals["var_prime"] = prime;
    m.locals["var_rx"] = rx;

    int done_ab = ensure_indicator(m.done).indicator;
    int var_ab = ensure_indicator(target).indicator;
    int rx_ab = ensure_indicator(rx).indicator;

    std::string p = std::string(module_kind_name(m.kind)) + "." + std::to_string(idx) + ".";
    auto add = [&](SpeciesCoefs r, SpeciesCoefs pr, RateTier tier, const std::string& ref) {
        m.reactions.push_back(crn_.add_reaction(std::move(r), std::move(pr), tier, false, p + ref));
    };
    add({{target, 1}, {m.start, 1}, {done_ab, 1}}, {{prime, 1}, {m.start, 1}}, RateTier::Slow, "1");
    add({{m.start, 1}, {var_ab, 1}}, {{m.done, 1}}, RateTier::Slow, "2");
    // Transfer back: each firing returns one var' to var and emits an rx
    // token whose absence later signals that the transfer has drained.
    add({{m.done, 1}, {prime, 2}}, {{m.done, 1}, {target, 1}, {prime, 1}, {rx, 1}},
        RateTier::Slow, "3");
    add({{rx, 1}}, {}, RateTier::Slow, "4");
    // The final var' molecule is resolved only once rx is gone. Runs a tier
    // below the transfer so it cannot outrace reaction 3 while var' pairs
    // remain.
    if (increment)
        add({{m.done, 1}, {rx_ab, 1}, {prime, 1}}, {{m.done, 1}, {target, 2}},
            RateTier::VerySlow, "5.2");
    else
        add({{m.done, 1}, {rx_ab, 1}, {prime, 1}}, {{m.done, 1}}, RateTier::VerySlow, "5.1");
    add({{m.done, 2}}, {{m.done, 1}}, RateTier::Fast, "6");
    add({{m.start, 1}, {m.done, 1}}, {{m.done, 1}}, RateTier::Slow, "7");

    instances_.push_back(m);
    return m;
}

ModuleInstance TemplateBuilder::instantiate_compare(int a, int b, Count fuel_init) {
    int idx = next_index_++;
    ModuleInstance m;
    m.kind = ModuleKind::Compare;
    m.index = idx;
    int fuel = crn_.add_species(suffixed("fuel", idx), fuel_init, SpeciesKind::Fuel);
    int t1 = crn_.add_species(suffixed("t1", idx), 0, SpeciesKind::DetectionT);
    int t2 = crn_.add_species(suffixed("t2", idx), 0, SpeciesKind::DetectionT);
    int t3 = crn_.add_species(suffixed("t3", idx), 0, SpeciesKind::DetectionT);
    m.start = fuel;  // fuel is the trigger: no token can appear without it
    m.done = -1;     // outcome is read from the surviving token
    m.locals["a"] = a;
    m.locals["b"] = b;
    m.locals["fuel"] = fuel;
    m.locals["t1"] = t1;
    m.locals["t2"] = t2;
    m.locals["t3"] = t3;

    int a_ab = ensure_indicator(a).indicator;
    int b_ab = ensure_indicator(b).indicator;

    std::string p = std::string(module_kind_name(m.kind)) + "." + std::to_string(idx) + ".";
    auto add = [&](SpeciesCoefs r, SpeciesCoefs pr, const std::string& ref) {
        m.reactions.push_back(crn_.add_reaction(std::move(r), std::move(pr), RateTier::Slow,
                                                false, p + ref));
    };
    add({{a, 1}, {b, 1}}, {}, "1");
    // Detection: one fuel converts into the token matching the survivor.
    add({{fuel, 1}, {a_ab, 1}, {b_ab, 1}}, {{a_ab, 1}, {b_ab, 1}, {t1, 1}}, "2.1");
    add({{fuel, 1}, {a, 1}, {b_ab, 1}}, {{a, 1}, {b_ab, 1}, {t2, 1}}, "2.2");
    add({{fuel, 1}, {a_ab, 1}, {b, 1}}, {{a_ab, 1}, {b, 1}, {t3, 1}}, "2.3");
    // Scavenging: in each terminal context the two wrong tokens are
    // destroyed; the context species act catalytically.
    add({{a_ab, 1}, {b_ab, 1}, {t2, 1}}, {{a_ab, 1}, {b_ab, 1}}, "3.1.1");
    add({{a_ab, 1}, {b_ab, 1}, {t3, 1}}, {{a_ab, 1}, {b_ab, 1}}, "3.1.2");
    add({{a, 1}, {b_ab, 1}, {t1, 1}}, {{a, 1}, {b_ab, 1}}, "3.2.1");
    add({{a, 1}, {b_ab, 1}, {t3, 1}}, {{a, 1}, {b_ab, 1}}, "3.2.2");
    add({{a_ab, 1}, {b, 1}, {t1, 1}}, {{a_ab, 1}, {b, 1}}, "3.3.1");
    add({{a_ab, 1}, {b, 1}, {t2, 1}}, {{a_ab, 1}, {b, 1}}, "3.3.2");

    instances_.push_back(m);
    return m;
}

ModuleInstance TemplateBuilder::instantiate_subtract(int target, int temp) {
    int idx = next_index_++;
    ModuleInstance m;
    m.kind = ModuleKind::Subtract;
    m.index = idx;
    m.start = crn_.add_species(suffixed("start", idx), 0, SpeciesKind::SignalStart);
    m.done = crn_.add_species(suffixed("done", idx), 0, SpeciesKind::SignalDone);
    m.locals["target"] = target;
    m.locals["temp"] = temp;

    std::string p = std::string(module_kind_name(m.kind)) + "." + std::to_string(idx) + ".";
    m.reactions.push_back(crn_.add_reaction({{target, 1}, {temp, 1}}, {}, RateTier::Fast,
                                            false, p + "1"));
    // The annihilation itself is passive; sequencing flows through a
    // pass-through two tiers below it, so the fast annihilation has long
    // finished when the chain moves on.
    m.reactions.push_back(crn_.add_reaction({{m.start, 1}}, {{m.done, 1}}, RateTier::VerySlow,
                                            false, p + "link.done"));

    instances_.push_back(m);
    return m;
}

int TemplateBuilder::add_link(int from, int guard, int to, const std::string& label) {
    SpeciesCoefs reactants{{from, 1}};
    SpeciesCoefs products{{to, 1}};
    if (guard >= 0) {
        reactants.push_back({guard, 1});
        products.push_back({guard, 1});
    }
    return crn_.add_reaction(std::move(reactants), std::move(products), RateTier::VerySlow,
                             false, label);
}

ModuleInstance TemplateBuilder::instantiate_multiply(int a, int b, int dest) {
    int idx = next_index_++;
    ModuleInstance m;
    m.kind = ModuleKind::Multiply;
    m.index = idx;

    int counter = crn_.add_species(suffixed("cnt", idx), 0, SpeciesKind::Register);
    int cmpa = crn_.add_species(suffixed("cmpa", idx), 0, SpeciesKind::Register);
    int zero = const_species(crn_, 0);
    m.locals["a"] = a;
    m.locals["b"] = b;
    m.locals["dest"] = dest;
    m.locals["counter"] = counter;
    m.locals["cmp_a"] = cmpa;

    // while (counter > 0) { dest += b; counter -= 1; }
    // Loop head: clear the comparison copy, refresh it from the counter,
    // then release fuel so exactly one token decides this iteration.
    ModuleInstance load = instantiate_copy(a, counter);
    ModuleInstance head_clear = instantiate_clear(cmpa);
    ModuleInstance head_copy = instantiate_copy(counter, cmpa);
    ModuleInstance cmp = instantiate_compare(cmpa, zero, 0);
    ModuleInstance body_copy = instantiate_copy(b, dest);
    ModuleInstance body_dec = instantiate_incdec(counter, false);

    m.start = load.start;
    m.done = crn_.add_species(suffixed("done", idx), 0, SpeciesKind::SignalDone);

    std::string p = std::string(module_kind_name(m.kind)) + "." + std::to_string(idx) + ".link.";
    auto guarded = [&](const ModuleInstance& prev, int to, const std::string& ref) {
        int guard = -1;
        auto it = prev.locals.find("var_prime");
        if (it != prev.locals.end()) guard = ensure_indicator(it->second).indicator;
        m.reactions.push_back(add_link(prev.done, guard, to, p + ref));
    };
    guarded(load, head_clear.start, "enter");
    guarded(head_clear, head_copy.start, "head");
    // Fuel only appears after the fresh operand copy has fully settled.
    guarded(head_copy, cmp.start, "fuel");
    int t1 = cmp.locals.at("t1");
    int t2 = cmp.locals.at("t2");
    m.reactions.push_back(crn_.add_reaction({{t2, 1}}, {{body_copy.start, 1}}, RateTier::Fast,
                                            false, p + "body"));
    guarded(body_copy, body_dec.start, "dec");
    guarded(body_dec, head_clear.start, "loop");
    m.reactions.push_back(crn_.add_reaction({{t1, 1}}, {{m.done, 1}}, RateTier::Fast,
                                            false, p + "done"));

    instances_.push_back(m);
    return m;
}

int TemplateBuilder::chain(const ModuleInstance& prev, const ModuleInstance& next) {
    if (prev.index == next.index)
        throw std::invalid_argument("cannot chain a module to itself");
    if (prev.done < 0)
        throw std::invalid_argument("previous module exposes no done signal");
    if (next.start < 0)
        throw std::invalid_argument("next module exposes no start signal");
    int guard = -1;
    auto it = prev.locals.find("var_prime");
    if (it != prev.locals.end()) guard = ensure_indicator(it->second).indicator;
    return add_link(prev.done, guard, next.start, "chain." + std::to_string(++chain_count_));
}

}  // namespace ccx
