#include "frobenius/synth.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "frobenius/error.hpp"
#include "frobenius/semigroup.hpp"
#include "frobenius/stability.hpp"
#include "parallel.hpp"

namespace frobenius {

namespace {

Amount ceil_div(Amount num, Amount den) { return (num + den - 1) / den; }

// Above this modulus the sieve cross-check is skipped and only the Apéry
// route is used.
constexpr Amount kSieveModulusCap = 5000;

bool unit_path(FormulaPath path) { return path != FormulaPath::general_b1; }

// 1 = formula agrees, 0 = disagrees, -1 = a is not admissible (gcd).
signed char check_one(const CongruenceFormula& formula, const CoinSystem& system, Amount h, Amount d,
                      Amount a)
{
    if (std::gcd(a, d) != 1) {
        return -1;
    }
    const Instance instance(a, h, d, system);
    const Amount oracle = a <= kSieveModulusCap ? frobenius_cross_checked(instance.generators())
                                                : frobenius_oracle(instance);
    return evaluate(formula, a, h, d, Bound::speculative) == oracle ? 1 : 0;
}

template <class Loop>
CertifyReport certify_with(const CongruenceFormula& formula, Amount h, Amount d, Amount a_hi, Loop loop)
{
    if (h < 1 || d < 1) {
        throw PreconditionError("h and d must be positive");
    }
    if (a_hi < formula.a_min_paper) {
        throw PreconditionError("a_hi = " + std::to_string(a_hi) + " is below a_min_paper = " +
                                std::to_string(formula.a_min_paper));
    }
    const CoinSystem system(formula.denoms);
    const Amount count = std::max<Amount>(a_hi - 1, 0);
    std::vector<signed char> outcome(static_cast<std::size_t>(count), -1);
    loop(count, [&](std::int64_t i) {
        outcome[static_cast<std::size_t>(i)] = check_one(formula, system, h, d, 2 + i);
    });

    CertifyReport report;
    report.h = h;
    report.d = d;
    report.a_hi = a_hi;
    for (Amount i = 0; i < count; i++) {
        const signed char o = outcome[static_cast<std::size_t>(i)];
        if (o >= 0) {
            report.checked++;
        }
        if (o == 0) {
            report.mismatches.push_back(2 + i);
        }
    }
    report.a_min_empirical = report.mismatches.empty() ? 2 : report.mismatches.back() + 1;
    for (Amount i = 0; i < count && 2 + i < report.a_min_empirical; i++) {
        if (outcome[static_cast<std::size_t>(i)] == 1) {
            report.exceptional.push_back(2 + i);
        }
    }
    return report;
}

} // namespace

std::string to_string(FormulaPath path)
{
    switch (path) {
    case FormulaPath::orderly:
        return "orderly";
    case FormulaPath::general_unit:
        return "general_unit";
    case FormulaPath::general_b1:
        return "general_b1";
    }
    return "unknown";
}

FormulaPath parse_formula_path(const std::string& text)
{
    if (text == "orderly") {
        return FormulaPath::orderly;
    }
    if (text == "general_unit") {
        return FormulaPath::general_unit;
    }
    if (text == "general_b1") {
        return FormulaPath::general_b1;
    }
    throw PreconditionError("unknown formula path '" + text + "'");
}

Amount CongruenceFormula::h_min(Amount d) const
{
    if (h_min_rule == 0) {
        return 1;
    }
    return std::max<Amount>(1, ceil_div(modulus * d, h_min_rule));
}

const FormulaEntry& CongruenceFormula::entry_for(Amount a) const
{
    return entries[static_cast<std::size_t>(a % modulus)];
}

CongruenceFormula synthesize(const CoinSystem& system, PathChoice choice)
{
    if (!system.unit_leading()) {
        throw PreconditionError("synthesize needs b_1 = 1; use synthesize_general");
    }
    if (system.size() < 2) {
        throw PreconditionError("synthesize needs k >= 2");
    }
    const StabilityProfile prof = profile(system);
    const bool orderly = prof.orderly.value_or(false) && choice == PathChoice::automatic;
    const Amount bk = system.largest();

    CongruenceFormula out;
    out.denoms.assign(system.denoms().begin(), system.denoms().end());
    out.modulus = bk;
    out.path = orderly ? FormulaPath::orderly : FormulaPath::general_unit;
    out.offset = orderly ? prof.c - 1 : prof.u + prof.c - 1;
    out.a_min_paper = out.offset * bk;
    out.h_min_rule = (orderly && prof.forced_c2) ? 0 : out.a_min_paper;

    const OptTable table = build_table(system, (out.offset + 1) * bk);
    out.entries.reserve(static_cast<std::size_t>(bk));
    for (Amount j = 0; j < bk; j++) {
        const Amount base = out.offset * bk + j;
        // Lexicographic max on (O_B(r), r): ties go to the largest r.
        Amount best_r = base - bk;
        Amount best_w = table[best_r].value();
        for (Amount r = base - bk + 1; r < base; r++) {
            const Amount w = table[r].value();
            if (w >= best_w) {
                best_w = w;
                best_r = r;
            }
        }
        out.entries.push_back(FormulaEntry{j, best_w, best_r});
    }
    return out;
}

std::vector<std::string> formula_invariant_violations(const CongruenceFormula& formula)
{
    std::vector<std::string> problems;
    const Amount m = formula.modulus;
    if (formula.denoms.empty() || formula.denoms.back() != m) {
        problems.push_back("modulus differs from b_k");
    }
    if (static_cast<Amount>(formula.entries.size()) != m) {
        problems.push_back("entry count differs from modulus");
        return problems;
    }
    for (Amount j = 0; j < m; j++) {
        if (formula.entries[static_cast<std::size_t>(j)].residue != j) {
            problems.push_back("residues out of order at " + std::to_string(j));
        }
    }
    if (!unit_path(formula.path)) {
        return problems;
    }
    const auto& e = formula.entries;
    for (std::size_t j = 1; j < e.size(); j++) {
        if (e[j].weight < e[j - 1].weight) {
            problems.push_back("W decreases at residue " + std::to_string(j));
        }
        if (e[j].representative < e[j - 1].representative) {
            problems.push_back("R decreases at residue " + std::to_string(j));
        }
    }
    if (e.back().weight - e.front().weight > 1) {
        problems.push_back("w_last - w_0 exceeds 1");
    }
    Amount r_max = 0;
    for (const FormulaEntry& entry : e) {
        if (entry.representative < (formula.offset - 1) * m || entry.representative >= (formula.offset + 1) * m) {
            problems.push_back("r_" + std::to_string(entry.residue) + " outside its window");
        }
        r_max = std::max(r_max, entry.representative);
    }
    const OptTable table = build_table(CoinSystem(formula.denoms), std::max<Amount>(r_max, 0));
    for (const FormulaEntry& entry : e) {
        if (entry.representative < 0 || table[entry.representative] != Count(entry.weight)) {
            problems.push_back("w_" + std::to_string(entry.residue) + " differs from O_B(r)");
        }
    }
    return problems;
}

Amount evaluate(const CongruenceFormula& formula, Amount a, Amount h, Amount d, Bound bound)
{
    if (a < 1 || h < 1 || d < 1) {
        throw PreconditionError("a, h, d must be positive");
    }
    if (std::gcd(a, d) != 1) {
        throw FormulaDomainError(Violation::gcd, "gcd(a, d) must be 1");
    }
    if (bound != Bound::speculative) {
        Amount a_min = formula.a_min_paper;
        if (bound == Bound::empirical && formula.a_min_empirical) {
            a_min = *formula.a_min_empirical;
        }
        if (a < a_min) {
            throw FormulaDomainError(Violation::a_bound,
                                     "a = " + std::to_string(a) + " is below " + std::to_string(a_min));
        }
        if (h < formula.h_min(d)) {
            throw FormulaDomainError(Violation::h_bound, "h = " + std::to_string(h) + " is below " +
                                                             std::to_string(formula.h_min(d)));
        }
    }
    const FormulaEntry& e = formula.entry_for(a);
    const Amount m = formula.modulus;
    return (e.weight * h - 1) * a + e.representative * d + (h * a + m * d) * (a / m - formula.offset);
}

CertifyReport certify(const CongruenceFormula& formula, Amount h, Amount d, Amount a_hi)
{
    return certify_with(formula, h, d, a_hi, [](std::int64_t n, auto&& fn) { detail::parallel_for(n, fn); });
}

CertifyReport certify_serial(const CongruenceFormula& formula, Amount h, Amount d, Amount a_hi)
{
    return certify_with(formula, h, d, a_hi, [](std::int64_t n, auto&& fn) { detail::serial_for(n, fn); });
}

CongruenceFormula with_certification(CongruenceFormula formula, const CertifyReport& report)
{
    formula.a_min_empirical = report.a_min_empirical;
    formula.exceptional = report.exceptional;
    return formula;
}

namespace {

// (w_j, r_j) at a = s b_k + j, shifted back to offset 0.
std::vector<FormulaEntry> general_coefficients(const CoinSystem& system, const std::vector<char>& missing,
                                               const OptTable& table, Amount s)
{
    const Amount bk = system.largest();
    std::vector<FormulaEntry> entries;
    entries.reserve(static_cast<std::size_t>(bk));
    for (Amount j = 0; j < bk; j++) {
        const Amount a = s * bk + j;
        Amount best_w = -1;
        Amount best_n = -1;
        for (Amount r = 0; r < a; r++) {
            const bool skip_zero = r < static_cast<Amount>(missing.size()) && missing[static_cast<std::size_t>(r)];
            const Amount n = skip_zero ? a + r : r;
            const Amount w = table[n].value();
            if (w > best_w || (w == best_w && n > best_n)) {
                best_w = w;
                best_n = n;
            }
        }
        entries.push_back(FormulaEntry{j, best_w - s, best_n - bk * s});
    }
    return entries;
}

} // namespace

CongruenceFormula synthesize_general(const CoinSystem& system, Amount verify_span)
{
    if (system.unit_leading()) {
        throw PreconditionError("synthesize_general is for b_1 > 1; use synthesize");
    }
    if (!system.coprime()) {
        throw NotCoprimeError("synthesize_general needs gcd(B) = 1");
    }
    if (verify_span < 0) {
        throw PreconditionError("verify_span must be nonnegative");
    }
    const StabilityProfile prof = profile(system);
    const NonRepresentable nr = non_representables(system);
    const Amount bk = system.largest();

    std::vector<char> missing(static_cast<std::size_t>(nr.frobenius) + 1, 0);
    for (Amount n : nr.values) {
        missing[static_cast<std::size_t>(n)] = 1;
    }

    constexpr Amount kAgreeingPeriods = 3;
    constexpr Amount kMaxSearch = 64;
    const Amount s0 = ceil_div(std::max(nr.frobenius + 1, prof.exact_threshold), bk) + prof.c;
    const OptTable table = build_table(system, 2 * (s0 + kMaxSearch + kAgreeingPeriods + 1) * bk);

    std::vector<std::vector<FormulaEntry>> window;
    Amount base = -1;
    for (Amount s = s0; s < s0 + kMaxSearch + kAgreeingPeriods; s++) {
        window.push_back(general_coefficients(system, missing, table, s));
        if (static_cast<Amount>(window.size()) > kAgreeingPeriods) {
            window.erase(window.begin());
        }
        if (static_cast<Amount>(window.size()) == kAgreeingPeriods &&
            std::all_of(window.begin(), window.end(), [&](const auto& e) { return e == window.front(); })) {
            base = s - kAgreeingPeriods + 1;
            break;
        }
    }
    if (base < 0) {
        throw std::runtime_error("coefficients did not stabilize for " + system.to_string());
    }

    CongruenceFormula out;
    out.denoms.assign(system.denoms().begin(), system.denoms().end());
    out.modulus = bk;
    out.offset = 0;
    out.path = FormulaPath::general_b1;
    out.a_min_paper = base * bk;
    out.h_min_rule = out.a_min_paper;
    out.entries = window.front();
    if (verify_span == 0) {
        return out;
    }

    const CertifyReport report = certify(out, 1, 1, out.a_min_paper + verify_span * bk - 1);
    const auto bad = std::lower_bound(report.mismatches.begin(), report.mismatches.end(), out.a_min_paper);
    if (bad != report.mismatches.end()) {
        throw CertificationFailure(*bad, "formula for " + system.to_string() + " fails at a = " +
                                             std::to_string(*bad));
    }
    out = with_certification(std::move(out), report);
    // Certification ran at h = d = 1, so the rule must admit that pair.
    out.h_min_rule = std::max(*out.a_min_empirical, bk);
    return out;
}

std::vector<PiecewiseRow> piecewise_rows(const CongruenceFormula& formula)
{
    std::vector<PiecewiseRow> rows;
    for (const FormulaEntry& e : formula.entries) {
        if (!rows.empty() && rows.back().weight == e.weight && rows.back().representative == e.representative) {
            rows.back().residues.push_back(e.residue);
            continue;
        }
        rows.push_back(PiecewiseRow{{e.residue}, e.weight, e.representative});
    }
    return rows;
}

std::string render_piecewise(const CongruenceFormula& formula)
{
    const Amount m = formula.modulus;
    std::ostringstream os;
    for (const PiecewiseRow& row : piecewise_rows(formula)) {
        os << "(" << row.weight << "h-1)a+" << row.representative << "d+(ha+" << m << "d)";
        if (formula.offset == 0) {
            os << "floor(a/" << m << ")";
        } else {
            os << "(floor(a/" << m << ")-" << formula.offset << ")";
        }
        os << "  if a = ";
        for (std::size_t i = 0; i < row.residues.size(); i++) {
            os << (i ? "," : "") << row.residues[i];
        }
        os << " mod " << m << '\n';
    }
    return os.str();
}

} // namespace frobenius
