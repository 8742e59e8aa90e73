#pragma once

#include <string>

#include "frobenius/families.hpp"
#include "frobenius/semigroup.hpp"
#include "frobenius/stability.hpp"
#include "frobenius/synth.hpp"

namespace frobenius {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Canonical formula document. Fields appear in a fixed order:
// denoms, modulus, offset, path, h_min_rule, a_min_paper, a_min_empirical,
// exceptional, entries. serialize(parse_formula(doc)) == doc for any document
// produced by serialize.
std::string serialize(const CongruenceFormula& formula);
CongruenceFormula parse_formula(const std::string& document);

std::string serialize(const StabilityProfile& profile);
StabilityProfile parse_profile(const std::string& document);

// Table values with null for non-representable amounts.
std::string serialize(const OptTable& table);
OptTable parse_table(const std::string& document);

std::string serialize(const CertifyReport& report);
CertifyReport parse_certify_report(const std::string& document);

std::string serialize(const ResidueView& view);
std::string serialize(const NonRepresentable& set);
std::string serialize(const CrossCheckReport& report);

} // namespace frobenius
