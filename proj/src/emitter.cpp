#include "ccx/emitter.hpp"

#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

namespace ccx {

namespace {

std::string format_rate(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

}  // namespace

std::string emit_cain_xml(const Crn& crn, const RateConfig& rates) {
    std::ostringstream os;
    os << "<cain>\n";
    os << "  <listOfModels>\n";
    os << "    <model id=\"ccx\">\n";
    os << "      <listOfParameters>\n";
    os << "        <parameter id=\"fast\" expression=\"" << format_rate(rates.fast) << "\"/>\n";
    os << "        <parameter id=\"slow\" expression=\"" << format_rate(rates.slow) << "\"/>\n";
    os << "        <parameter id=\"veryslow\" expression=\"" << format_rate(rates.veryslow)
       << "\"/>\n";
    os << "      </listOfParameters>\n";
    if (crn.species.empty()) {
        os << "      <listOfSpecies/>\n";
    } else {
        os << "      <listOfSpecies>\n";
        for (const auto& s : crn.species) {
            os << "        <species id=\"s" << s.id << "\" name=\"" << s.name
               << "\" initialAmount=\"" << s.initial_count << "\"/>\n";
        }
        os << "      </listOfSpecies>\n";
    }
    if (crn.reactions.empty()) {
        os << "      <listOfReactions/>\n";
    } else {
        os << "      <listOfReactions>\n";
        for (size_t i = 0; i < crn.reactions.size(); ++i) {
            const Reaction& r = crn.reactions[i];
            os << "        <reaction id=\"r" << i << "\" massAction=\"true\" propensity=\""
               << rate_tier_name(r.tier) << "\">\n";
            auto side = [&](const char* element, const SpeciesCoefs& coefs) {
                if (coefs.empty()) {
                    os << "          <" << element << "/>\n";
                    return;
                }
                os << "          <" << element << ">\n";
                for (const auto& [id, stoich] : coefs) {
                    os << "            <speciesReference species=\"s" << id
                       << "\" stoichiometry=\"" << stoich << "\"/>\n";
                }
                os << "          </" << element << ">\n";
            };
            side("listOfReactants", r.reactants);
            side("listOfProducts", r.products);
            os << "        </reaction>\n";
        }
        os << "      </listOfReactions>\n";
    }
    os << "    </model>\n";
    os << "  </listOfModels>\n";
    os << "</cain>\n";
    return os.str();
}

namespace {

// ---------------------------------------------------------------------------
// Minimal XML reader for the dialect emitted above. Tracks byte offsets for
// diagnostics.
// ---------------------------------------------------------------------------

struct XmlError {
    Diagnostic diag;
};

struct XmlNode {
    std::string name;
    std::map<std::string, std::string> attributes;
    std::vector<XmlNode> children;
    size_t offset = 0;
};

class XmlReader {
public:
    explicit XmlReader(std::string_view text) : text_(text) {}

    XmlNode parse_document() {
        skip_misc();
        XmlNode root = parse_element();
        skip_misc();
        if (pos_ != text_.size()) fail("trailing content after document element");
        return root;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what, size_t at = std::string::npos) {
        size_t offset = at == std::string::npos ? pos_ : at;
        throw XmlError{{static_cast<int>(offset),
                        "malformed XML at byte " + std::to_string(offset) + ": " + what}};
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void skip_misc() {
        while (true) {
            skip_ws();
            if (pos_ + 1 < text_.size() && peek() == '<' && text_[pos_ + 1] == '?') {
                size_t end = text_.find("?>", pos_);
                if (end == std::string_view::npos) fail("unterminated processing instruction");
                pos_ = end + 2;
                continue;
            }
            if (pos_ + 3 < text_.size() && text_.substr(pos_, 4) == "<!--") {
                size_t end = text_.find("-->", pos_);
                if (end == std::string_view::npos) fail("unterminated comment");
                pos_ = end + 3;
                continue;
            }
            return;
        }
    }

    std::string parse_name() {
        size_t start = pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                          peek() == '-' || peek() == ':'))
            ++pos_;
        if (pos_ == start) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    XmlNode parse_element() {
        if (eof() || peek() != '<') fail("expected '<'");
        XmlNode node;
        node.offset = pos_;
        ++pos_;
        node.name = parse_name();
        while (true) {
            skip_ws();
            if (eof()) fail("unterminated element");
            if (peek() == '/') {
                ++pos_;
                if (eof() || peek() != '>') fail("expected '>' after '/'");
                ++pos_;
                return node;  // self-closing
            }
            if (peek() == '>') {
                ++pos_;
                break;
            }
            size_t attr_at = pos_;
            std::string key = parse_name();
            skip_ws();
            if (eof() || peek() != '=') fail("expected '=' in attribute", attr_at);
            ++pos_;
            skip_ws();
            if (eof() || (peek() != '"' && peek() != '\'')) fail("expected quoted value", attr_at);
            char quote = peek();
            ++pos_;
            size_t val_start = pos_;
            while (!eof() && peek() != quote) ++pos_;
            if (eof()) fail("unterminated attribute value", attr_at);
            node.attributes[key] = std::string(text_.substr(val_start, pos_ - val_start));
            ++pos_;
        }
        // Children until the matching close tag. Only element content and
        // whitespace appear in this dialect.
        while (true) {
            skip_misc();
            if (eof()) fail("missing close tag for <" + node.name + ">");
            if (peek() != '<') fail("unexpected text content");
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                size_t at = pos_;
                pos_ += 2;
                std::string closing = parse_name();
                if (closing != node.name) fail("mismatched close tag </" + closing + ">", at);
                skip_ws();
                if (eof() || peek() != '>') fail("expected '>'", at);
                ++pos_;
                return node;
            }
            node.children.push_back(parse_element());
        }
    }
};

const XmlNode* find_child(const XmlNode& node, const std::string& name) {
    for (const auto& child : node.children)
        if (child.name == name) return &child;
    return nullptr;
}

const std::string& require_attr(const XmlNode& node, const std::string& key) {
    auto it = node.attributes.find(key);
    if (it == node.attributes.end())
        throw XmlError{{static_cast<int>(node.offset),
                        "malformed XML at byte " + std::to_string(node.offset) + ": <" +
                            node.name + "> missing attribute '" + key + "'"}};
    return it->second;
}

long long parse_count(const XmlNode& node, const std::string& key) {
    const std::string& raw = require_attr(node, key);
    if (raw.empty() || raw.find_first_not_of("0123456789") != std::string::npos)
        throw XmlError{{static_cast<int>(node.offset),
                        "malformed XML at byte " + std::to_string(node.offset) +
                            ": attribute '" + key + "' must be a non-negative integer"}};
    return std::stoll(raw);
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

bool has_suffix_index(std::string_view name, std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix) return false;
    return all_digits(name.substr(prefix.size()));
}

/// Best-effort kind recovery from the generator's naming conventions.
SpeciesKind classify_species(const std::string& name) {
    if (name.size() > 3 && name.substr(name.size() - 3) == "_ab")
        return SpeciesKind::AbsenceIndicator;
    if (has_suffix_index(name, "start_")) return SpeciesKind::SignalStart;
    if (has_suffix_index(name, "done_")) return SpeciesKind::SignalDone;
    if (has_suffix_index(name, "fuel_")) return SpeciesKind::Fuel;
    if (has_suffix_index(name, "t1_") || has_suffix_index(name, "t2_") ||
        has_suffix_index(name, "t3_"))
        return SpeciesKind::DetectionT;
    // Working copies carry a p/rx stem plus instance suffix; primes of
    // register names ("_localxp_5") must win over the register prefixes.
    size_t underscore = name.rfind('_');
    if (underscore != std::string::npos && all_digits(name.substr(underscore + 1))) {
        std::string_view stem = std::string_view(name).substr(0, underscore);
        if (stem.size() >= 1 && (stem.back() == 'p' ||
                                 (stem.size() >= 2 && stem.substr(stem.size() - 2) == "rx")))
            return SpeciesKind::TempPrime;
    }
    if ((name.size() > 1 && name[0] == 'c' && all_digits(name.substr(1))) ||
        (name.size() > 2 && name.substr(0, 2) == "_c" && all_digits(name.substr(2))))
        return SpeciesKind::Constant;
    if (name.rfind("_local", 0) == 0 || name.rfind("_tmp", 0) == 0 ||
        has_suffix_index(name, "cnt_") || has_suffix_index(name, "cmpa_"))
        return SpeciesKind::Register;
    return SpeciesKind::UserVariable;
}

/// Maintenance shape recovery: generate (0 -> X_ab), consume
/// (Y + Y_ab -> Y), cap (2 X_ab -> X_ab).
bool is_maintenance_shape(const Crn& crn, const Reaction& r) {
    auto is_indicator = [&](int id) {
        const std::string& n = crn.species[id].name;
        return n.size() > 3 && n.substr(n.size() - 3) == "_ab";
    };
    if (r.reactants.empty() && r.products.size() == 1 && r.products[0].second == 1 &&
        is_indicator(r.products[0].first))
        return true;
    if (r.reactants.size() == 1 && r.products.size() == 1 &&
        r.reactants[0].first == r.products[0].first && r.reactants[0].second == 2 &&
        r.products[0].second == 1 && is_indicator(r.reactants[0].first))
        return true;
    if (r.reactants.size() == 2 && r.products.size() == 1) {
        int kept = r.products[0].first;
        for (const auto& [id, stoich] : r.reactants) {
            if (id == kept || stoich != 1) continue;
            if (r.products[0].second != 1) return false;
            const std::string& ab = crn.species[id].name;
            const std::string& base = crn.species[kept].name;
            if (ab == base + "_ab") return true;
        }
    }
    return false;
}

}  // namespace

XmlParseResult parse_cain_xml(std::string_view text) {
    try {
        XmlReader reader(text);
        XmlNode root = reader.parse_document();
        if (root.name != "cain")
            throw XmlError{{static_cast<int>(root.offset), "malformed XML at byte " +
                                                               std::to_string(root.offset) +
                                                               ": expected <cain> document"}};
        const XmlNode* models = find_child(root, "listOfModels");
        const XmlNode* model = models ? find_child(*models, "model") : nullptr;
        if (!model)
            throw XmlError{{static_cast<int>(root.offset),
                            "malformed XML at byte " + std::to_string(root.offset) +
                                ": no <model> element"}};

        ParsedModel out;
        if (const XmlNode* params = find_child(*model, "listOfParameters")) {
            for (const auto& p : params->children) {
                if (p.name != "parameter") continue;
                const std::string& id = require_attr(p, "id");
                double value = std::stod(require_attr(p, "expression"));
                if (id == "fast") out.rates.fast = value;
                else if (id == "slow") out.rates.slow = value;
                else if (id == "veryslow") out.rates.veryslow = value;
            }
        }

        std::map<std::string, int> by_document_id;
        if (const XmlNode* species = find_child(*model, "listOfSpecies")) {
            for (const auto& s : species->children) {
                if (s.name != "species") continue;
                const std::string& name = require_attr(s, "name");
                long long initial = parse_count(s, "initialAmount");
                int id = out.crn.add_species(name, initial, classify_species(name));
                by_document_id[require_attr(s, "id")] = id;
            }
        }

        if (const XmlNode* reactions = find_child(*model, "listOfReactions")) {
            int n = 0;
            for (const auto& rx : reactions->children) {
                if (rx.name != "reaction") continue;
                const std::string& tier_name = require_attr(rx, "propensity");
                RateTier tier;
                if (tier_name == "fast") tier = RateTier::Fast;
                else if (tier_name == "slow") tier = RateTier::Slow;
                else if (tier_name == "veryslow") tier = RateTier::VerySlow;
                else
                    throw XmlError{{static_cast<int>(rx.offset),
                                    "unknown propensity reference '" + tier_name +
                                        "' at byte " + std::to_string(rx.offset)}};
                auto read_side = [&](const char* element) {
                    SpeciesCoefs side;
                    const XmlNode* list = find_child(rx, element);
                    if (!list) return side;
                    for (const auto& ref : list->children) {
                        if (ref.name != "speciesReference") continue;
                        const std::string& sid = require_attr(ref, "species");
                        auto it = by_document_id.find(sid);
                        if (it == by_document_id.end())
                            throw XmlError{{static_cast<int>(ref.offset),
                                            "reaction references undefined species '" + sid +
                                                "' at byte " + std::to_string(ref.offset)}};
                        side.emplace_back(it->second, static_cast<int>(parse_count(ref, "stoichiometry")));
                    }
                    return side;
                };
                out.crn.add_reaction(read_side("listOfReactants"), read_side("listOfProducts"),
                                     tier, false, "r" + std::to_string(n++));
            }
        }

        for (auto& r : out.crn.reactions) r.is_maintenance = is_maintenance_shape(out.crn, r);
        for (const auto& s : out.crn.species)
            if (s.kind == SpeciesKind::UserVariable) out.crn.observables.push_back(s.id);
        return out;
    } catch (const XmlError& e) {
        return e.diag;
    } catch (const std::exception& e) {
        return Diagnostic{0, std::string("malformed XML: ") + e.what()};
    }
}

std::string emit_crn_text(const Crn& crn) {
    std::ostringstream os;
    for (const auto& s : crn.species)
        os << "# species: " << s.name << "=" << s.initial_count << "\n";
    for (const auto& r : crn.reactions) {
        os << r.label << ": ";
        auto side = [&](const SpeciesCoefs& coefs) {
            if (coefs.empty()) {
                os << "0";
                return;
            }
            bool first = true;
            for (const auto& [id, stoich] : coefs) {
                if (!first) os << " + ";
                first = false;
                if (stoich != 1) os << stoich << " ";
                os << crn.species[id].name;
            }
        };
        side(r.reactants);
        os << " ->" << rate_tier_name(r.tier) << " ";
        side(r.products);
        os << "\n";
    }
    return os.str();
}

}  // namespace ccx
