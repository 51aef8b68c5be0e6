#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccx/crn.hpp"

namespace ccx {

enum class ModuleKind { Clear, Copy, Inc, Dec, Compare, Subtract, Multiply };

const char* module_kind_name(ModuleKind kind);

/// One instantiated reaction template with uniquely suffixed species.
/// Template reactions carry labels `{kind}.{index}.{ref}`; wiring reactions
/// owned by an instance carry `.link.` in the ref and are not counted as
/// template reactions.
struct ModuleInstance {
    ModuleKind kind;
    int index = 0;
    int start = -1;  // trigger species; the fuel species for compare
    int done = -1;   // completion species; -1 for compare (token readout)
    std::map<std::string, int> locals;
    std::vector<int> reactions;
};

/// Absence-indicator machinery for one species: the indicator is generated
/// slowly, consumed fast while the indicated species is present, and capped
/// at one molecule. Presence of `{name}_ab` therefore signals count zero.
struct IndicatorBinding {
    int indicated = -1;
    int indicator = -1;
    int generate_rx = -1;
    int consume_rx = -1;
    int cap_rx = -1;
};

/// Shared constant species `c{value}` with initial count = value, created
/// once per distinct literal. Falls back to `_c{value}` when a user variable
/// already took the plain name.
int const_species(Crn& crn, Count value);

/// Instantiates the rate-independent reaction sets into a CRN under
/// construction. Single-threaded builder; one compilation = one builder.
class TemplateBuilder {
public:
    explicit TemplateBuilder(Crn& crn) : crn_(crn) {}

    Crn& crn() { return crn_; }

    /// Idempotent: the second call for a species returns the existing binding.
    const IndicatorBinding& ensure_indicator(int species_id);
    /// Indicator species id, or -1 when no binding exists.
    int indicator_of(int species_id) const;
    const std::map<int, IndicatorBinding>& indicator_bindings() const { return bindings_; }

    /// target := 0. Five reactions; done appears once every target molecule
    /// has been parked as var' and destroyed.
    ModuleInstance instantiate_clear(int target);

    /// dest := dest + source, restoring source (reactions 2.1-2.5).
    ModuleInstance instantiate_copy(int source, int dest);

    /// target := target+1 (increment) or max(target-1, 0) (decrement).
    ModuleInstance instantiate_incdec(int target, bool increment);

    /// Three-way comparison on destructible working copies a and b. Leaves
    /// exactly one token at quiescence: t1 if a=b, t2 if a>b, t3 if a<b.
    /// The fuel supply bounds token creation to one per invocation.
    ModuleInstance instantiate_compare(int a, int b, Count fuel_init = 1);

    /// target := max(target - temp, 0) by fast annihilation (reaction 5.1).
    /// The caller copies the subtrahend into temp first and clears any
    /// residue afterwards.
    ModuleInstance instantiate_subtract(int target, int temp);

    /// dest := dest + a*b via the comparison/copy/decrement loop. dest must
    /// be cleared by the caller beforehand.
    ModuleInstance instantiate_multiply(int a, int b, int dest);

    /// Sequencing reaction done_prev -> start_next at the veryslow tier.
    /// When the previous module tracks a var' working species, its absence
    /// indicator rides along catalytically so hand-off waits for cleanup.
    int chain(const ModuleInstance& prev, const ModuleInstance& next);

    const std::vector<ModuleInstance>& instances() const { return instances_; }
    int next_index() const { return next_index_; }

private:
    Crn& crn_;
    std::vector<ModuleInstance> instances_;
    std::map<int, IndicatorBinding> bindings_;
    int next_index_ = 1;
    int chain_count_ = 0;

    std::string suffixed(const std::string& base, int idx) const;
    int add_link(int from, int guard, int to, const std::string& label);
};

}  // namespace ccx
