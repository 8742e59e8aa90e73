#include "frobenius/io.hpp"

#include <array>

#include "json.hpp"

namespace frobenius {

using Json = nlohmann::ordered_json;

namespace {

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void require_fields(const Json& doc, std::span<const char* const> fields)
{
    if (!doc.is_object() || doc.size() != fields.size()) {
        throw ParseError("expected an object with " + std::to_string(fields.size()) + " fields");
    }
    std::size_t i = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it, ++i) {
        if (it.key() != fields[i]) {
            throw ParseError("expected field '" + std::string(fields[i]) + "', found '" + it.key() + "'");
        }
    }
}

Json parse_object(const std::string& document, std::span<const char* const> fields)
{
    Json doc;
    try {
        doc = Json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    require_fields(doc, fields);
    return doc;
}

Amount integer(const Json& value, const char* name)
{
    if (!value.is_number_integer()) {
        throw ParseError(std::string("field '") + name + "' must be an integer");
    }
    return value.get<Amount>();
}

std::optional<Amount> nullable_integer(const Json& value, const char* name)
{
    if (value.is_null()) {
        return std::nullopt;
    }
    return integer(value, name);
}

std::vector<Amount> integers(const Json& value, const char* name)
{
    if (!value.is_array()) {
        throw ParseError(std::string("field '") + name + "' must be an array");
    }
    std::vector<Amount> out;
    for (const Json& v : value) {
        out.push_back(integer(v, name));
    }
    return out;
}

bool boolean(const Json& value, const char* name)
{
    if (!value.is_boolean()) {
        throw ParseError(std::string("field '") + name + "' must be a boolean");
    }
    return value.get<bool>();
}

template <class T>
Json nullable(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

CoinSystem system_from(const Json& value)
{
    try {
        return CoinSystem(integers(value, "denoms"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad denoms: ") + e.what());
    }
}

constexpr std::array<const char*, 9> kFormulaFields{
    "denoms", "modulus", "offset", "path", "h_min_rule", "a_min_paper", "a_min_empirical", "exceptional", "entries"};

} // namespace

std::string serialize(const CongruenceFormula& formula)
{
    Json doc;
    doc["denoms"] = formula.denoms;
    doc["modulus"] = formula.modulus;
    doc["offset"] = formula.offset;
    doc["path"] = to_string(formula.path);
    doc["h_min_rule"] = formula.h_min_rule;
    doc["a_min_paper"] = formula.a_min_paper;
    doc["a_min_empirical"] = nullable(formula.a_min_empirical);
    doc["exceptional"] = nullable(formula.exceptional);
    Json entries = Json::array();
    for (const FormulaEntry& e : formula.entries) {
        entries.push_back(Json{{"j", e.residue}, {"w", e.weight}, {"r", e.representative}});
    }
    doc["entries"] = std::move(entries);
    return dump(doc);
}

CongruenceFormula parse_formula(const std::string& document)
{
    const Json doc = parse_object(document, kFormulaFields);
    CongruenceFormula f;
    const CoinSystem system = system_from(doc["denoms"]);
    f.denoms.assign(system.denoms().begin(), system.denoms().end());
    f.modulus = integer(doc["modulus"], "modulus");
    f.offset = integer(doc["offset"], "offset");
    if (!doc["path"].is_string()) {
        throw ParseError("field 'path' must be a string");
    }
    try {
        f.path = parse_formula_path(doc["path"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    f.h_min_rule = integer(doc["h_min_rule"], "h_min_rule");
    f.a_min_paper = integer(doc["a_min_paper"], "a_min_paper");
    f.a_min_empirical = nullable_integer(doc["a_min_empirical"], "a_min_empirical");
    if (!doc["exceptional"].is_null()) {
        f.exceptional = integers(doc["exceptional"], "exceptional");
    }
    const Json& entries = doc["entries"];
    if (!entries.is_array()) {
        throw ParseError("field 'entries' must be an array");
    }
    static constexpr std::array<const char*, 3> kEntryFields{"j", "w", "r"};
    for (const Json& e : entries) {
        require_fields(e, kEntryFields);
        f.entries.push_back(FormulaEntry{integer(e["j"], "j"), integer(e["w"], "w"), integer(e["r"], "r")});
    }
    if (f.modulus != f.denoms.back()) {
        throw ParseError("modulus must equal the largest denomination");
    }
    if (static_cast<Amount>(f.entries.size()) != f.modulus) {
        throw ParseError("expected one entry per residue");
    }
    for (std::size_t j = 0; j < f.entries.size(); j++) {
        if (f.entries[j].residue != static_cast<Amount>(j)) {
            throw ParseError("entries must list residues 0..modulus-1 in order");
        }
    }
    return f;
}

namespace {

constexpr std::array<const char*, 9> kProfileFields{
    "denoms", "c", "forced_c2", "u", "paper_threshold", "exact_threshold", "orderly", "counterexample", "experimental"};

} // namespace

std::string serialize(const StabilityProfile& profile)
{
    Json doc;
    doc["denoms"] = std::vector<Amount>(profile.system.denoms().begin(), profile.system.denoms().end());
    doc["c"] = profile.c;
    doc["forced_c2"] = profile.forced_c2;
    doc["u"] = profile.u;
    doc["paper_threshold"] = profile.paper_threshold;
    doc["exact_threshold"] = profile.exact_threshold;
    doc["orderly"] = nullable(profile.orderly);
    doc["counterexample"] = nullable(profile.counterexample);
    doc["experimental"] = profile.experimental;
    return dump(doc);
}

StabilityProfile parse_profile(const std::string& document)
{
    const Json doc = parse_object(document, kProfileFields);
    StabilityProfile p{.system = system_from(doc["denoms"])};
    p.c = integer(doc["c"], "c");
    p.forced_c2 = boolean(doc["forced_c2"], "forced_c2");
    p.u = integer(doc["u"], "u");
    p.paper_threshold = integer(doc["paper_threshold"], "paper_threshold");
    p.exact_threshold = integer(doc["exact_threshold"], "exact_threshold");
    if (!doc["orderly"].is_null()) {
        p.orderly = boolean(doc["orderly"], "orderly");
    }
    p.counterexample = nullable_integer(doc["counterexample"], "counterexample");
    p.experimental = boolean(doc["experimental"], "experimental");
    return p;
}

std::string serialize(const OptTable& table)
{
    Json doc;
    doc["denoms"] = std::vector<Amount>(table.system().denoms().begin(), table.system().denoms().end());
    doc["limit"] = table.limit();
    Json values = Json::array();
    for (const Count& c : table.values()) {
        values.push_back(c.representable() ? Json(c.value()) : Json(nullptr));
    }
    doc["values"] = std::move(values);
    return dump(doc);
}

OptTable parse_table(const std::string& document)
{
    static constexpr std::array<const char*, 3> kFields{"denoms", "limit", "values"};
    const Json doc = parse_object(document, kFields);
    const CoinSystem system = system_from(doc["denoms"]);
    const Amount limit = integer(doc["limit"], "limit");
    if (limit < 0) {
        throw ParseError("limit must be nonnegative");
    }
    const Json& values = doc["values"];
    if (!values.is_array() || static_cast<Amount>(values.size()) != limit + 1) {
        throw ParseError("values must hold limit + 1 entries");
    }
    // Tables are derived data: rebuild and insist the document agrees.
    OptTable table = build_table(system, limit);
    for (Amount n = 0; n <= limit; n++) {
        const std::optional<Amount> v = nullable_integer(values[static_cast<std::size_t>(n)], "values");
        const Count expected = table[n];
        if (v.has_value() != expected.representable() || (v && *v != expected.value())) {
            throw ParseError("value at " + std::to_string(n) + " is not O_B(" + std::to_string(n) + ")");
        }
    }
    return table;
}

std::string serialize(const CertifyReport& report)
{
    Json doc;
    doc["h"] = report.h;
    doc["d"] = report.d;
    doc["a_hi"] = report.a_hi;
    doc["a_min_empirical"] = report.a_min_empirical;
    doc["exceptional"] = report.exceptional;
    doc["mismatches"] = report.mismatches;
    doc["checked"] = report.checked;
    return dump(doc);
}

CertifyReport parse_certify_report(const std::string& document)
{
    static constexpr std::array<const char*, 7> kFields{
        "h", "d", "a_hi", "a_min_empirical", "exceptional", "mismatches", "checked"};
    const Json doc = parse_object(document, kFields);
    CertifyReport r;
    r.h = integer(doc["h"], "h");
    r.d = integer(doc["d"], "d");
    r.a_hi = integer(doc["a_hi"], "a_hi");
    r.a_min_empirical = integer(doc["a_min_empirical"], "a_min_empirical");
    r.exceptional = integers(doc["exceptional"], "exceptional");
    r.mismatches = integers(doc["mismatches"], "mismatches");
    r.checked = static_cast<std::size_t>(integer(doc["checked"], "checked"));
    return r;
}

std::string serialize(const ResidueView& view)
{
    Json rows = Json::array();
    for (const auto& row : view) {
        Json out = Json::array();
        for (const ResidueEntry& e : row) {
            out.push_back(Json{{"n", e.amount}, {"t", e.count.representable() ? Json(e.count.value()) : Json(nullptr)}});
        }
        rows.push_back(std::move(out));
    }
    Json doc;
    doc["rows"] = std::move(rows);
    return dump(doc);
}

std::string serialize(const NonRepresentable& set)
{
    Json doc;
    doc["values"] = set.values;
    doc["frobenius"] = set.frobenius;
    return dump(doc);
}

std::string serialize(const CrossCheckReport& report)
{
    Json doc;
    doc["points"] = report.points;
    doc["in_domain"] = report.in_domain;
    doc["synth_compared"] = report.synth_compared;
    Json mismatches = Json::array();
    for (const CrossCheckMismatch& m : report.mismatches) {
        mismatches.push_back(Json{{"a", m.a},
                                  {"h", m.h},
                                  {"d", m.d},
                                  {"family", m.family},
                                  {"oracle", m.oracle},
                                  {"synth", nullable(m.synth)}});
    }
    doc["mismatches"] = std::move(mismatches);
    return dump(doc);
}

} // namespace frobenius
