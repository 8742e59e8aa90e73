#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobenius/coins.hpp"

namespace frobenius {

enum class FormulaPath { orderly, general_unit, general_b1 };

std::string to_string(FormulaPath path);
FormulaPath parse_formula_path(const std::string& text);

struct FormulaEntry {
    Amount residue = 0;
    Amount weight = 0;         // w_j
    Amount representative = 0; // r_j

    friend bool operator==(const FormulaEntry&, const FormulaEntry&) = default;
};

// For a = j (mod b_k), a above the validity bound, gcd(a, d) = 1 and h above
// the h rule:
//   g(A(a)) = (w_j h - 1) a + r_j d + (h a + b_k d)(floor(a / b_k) - offset)
struct CongruenceFormula {
    std::vector<Amount> denoms;
    Amount modulus = 0;
    Amount offset = 0;
    FormulaPath path = FormulaPath::general_unit;
    // h >= ceil(modulus * d / h_min_rule); 0 means no constraint on h.
    Amount h_min_rule = 0;
    Amount a_min_paper = 0;
    std::optional<Amount> a_min_empirical;
    std::optional<std::vector<Amount>> exceptional;
    std::vector<FormulaEntry> entries;

    bool certified() const { return a_min_empirical.has_value(); }
    Amount h_min(Amount d) const;
    const FormulaEntry& entry_for(Amount a) const;

    friend bool operator==(const CongruenceFormula&, const CongruenceFormula&) = default;
};

enum class PathChoice {
    automatic,    // orderly path when greedy is optimal, general otherwise
    force_general // always use offset u + c - 1
};

// Unit-leading synthesis. For each residue j the window [a* - b_k, a* - 1]
// with a* = offset * b_k + j is searched for the largest r maximizing O_B(r).
CongruenceFormula synthesize(const CoinSystem& system, PathChoice choice = PathChoice::automatic);

// Returns the list of violated structural invariants (empty when sound):
// monotone W and R, w_{last} - w_0 <= 1, the r_j window, and w_j = O_B(r_j).
std::vector<std::string> formula_invariant_violations(const CongruenceFormula& formula);

enum class Violation { a_bound, gcd, h_bound };

class FormulaDomainError : public std::invalid_argument {
public:
    FormulaDomainError(Violation kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}
    Violation kind() const { return kind_; }

private:
    Violation kind_;
};

enum class Bound {
    paper,       // a >= a_min_paper
    empirical,   // a >= a_min_empirical when certified, else a_min_paper
    speculative  // no a or h check; gcd(a, d) = 1 still required
};

Amount evaluate(const CongruenceFormula& formula, Amount a, Amount h, Amount d,
                Bound bound = Bound::paper);

struct CertifyReport {
    Amount h = 0;
    Amount d = 0;
    Amount a_hi = 0;
    Amount a_min_empirical = 2;
    // Valid a below a_min_empirical where the formula still agrees.
    std::vector<Amount> exceptional;
    // Every valid a where the formula disagrees with the oracle, ascending.
    std::vector<Amount> mismatches;
    std::size_t checked = 0;

    std::optional<Amount> last_mismatch() const
    {
        return mismatches.empty() ? std::nullopt : std::optional<Amount>(mismatches.back());
    }

    friend bool operator==(const CertifyReport&, const CertifyReport&) = default;
};

// Compares the formula against the oracle at every a in [2, a_hi] with
// gcd(a, d) = 1, evaluating speculatively below the validity bound.
// Parallel over a; the report does not depend on the thread count.
CertifyReport certify(const CongruenceFormula& formula, Amount h, Amount d, Amount a_hi);
// Single-threaded reference of certify.
CertifyReport certify_serial(const CongruenceFormula& formula, Amount h, Amount d, Amount a_hi);

// Copy of the formula with the report's empirical bound recorded.
CongruenceFormula with_certification(CongruenceFormula formula, const CertifyReport& report);

class CertificationFailure : public std::runtime_error {
public:
    CertificationFailure(Amount witness, const std::string& what)
        : std::runtime_error(what), witness_(witness) {}
    Amount witness() const { return witness_; }

private:
    Amount witness_;
};

// b_1 > 1 synthesis (experimental). Coefficients come from maximizing N_dr
// over representable r (m = 0) and non-representable r (m = 1) at a stable
// base a*, normalized to offset 0. The result is then certified at h = d = 1
// over verify_span periods above a*; verify_span = 0 returns it uncertified.
// Throws CertificationFailure if the formula breaks at or above a*.
CongruenceFormula synthesize_general(const CoinSystem& system, Amount verify_span);

// Consecutive residues sharing the same (w, r), in ascending order.
struct PiecewiseRow {
    std::vector<Amount> residues;
    Amount weight = 0;
    Amount representative = 0;
};

std::vector<PiecewiseRow> piecewise_rows(const CongruenceFormula& formula);
std::string render_piecewise(const CongruenceFormula& formula);

} // namespace frobenius
