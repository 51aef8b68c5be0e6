#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "ccx/crn.hpp"
#include "ccx/diagnostic.hpp"

namespace ccx {

/// Serializes the CRN as a CAIN model document. Deterministic: species and
/// reactions appear in internal id order, rate tiers become the parameters
/// fast/slow/veryslow referenced by each reaction's propensity attribute.
std::string emit_cain_xml(const Crn& crn, const RateConfig& rates);

struct ParsedModel {
    Crn crn;
    RateConfig rates;
};

/// Diagnostic line field carries the byte offset into the document.
using XmlParseResult = std::variant<ParsedModel, Diagnostic>;

/// Reads a document produced by emit_cain_xml (or written by hand in the
/// same dialect). Species kinds and maintenance flags are recovered from
/// naming and structural conventions, so the result is simulatable.
XmlParseResult parse_cain_xml(std::string_view text);

/// Plain-text listing: `# species: name=init` headers, then one reaction per
/// line as `label: r1 + 2 r2 ->tier p1 + p2` with `0` for an empty side.
std::string emit_crn_text(const Crn& crn);

}  // namespace ccx
