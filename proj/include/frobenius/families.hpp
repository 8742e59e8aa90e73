#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobenius/coins.hpp"
#include "frobenius/synth.hpp"

namespace frobenius {

enum class FamilyId {
    selmer_1k,    // B = (1, 2, ..., k)
    f_12b_b1,     // B = (1, 2, b, b+1), non-orderly
    f_12b_b1_2b,  // B = (1, 2, b, b+1, 2b)
    f_1b_2bm1,    // B = (1, b, 2b-1)
    f_12k_k,      // B = (1, 2, ..., k, K)
    f_4_8_15_17,  // B = (4, 8, 15, 17)
    ref_1_11_14,  // hard-coded piecewise tables
    ref_1_4_11_17,
    ref_1_5_9,
};

std::string to_string(FamilyId id);
FamilyId parse_family_id(const std::string& text);

class FamilyDomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Which piecewise body of F_12K_K to use; `automatic` picks by t = K mod k.
enum class KBranch { automatic, t_at_least_2, t_below_2 };

class FamilyFormula {
public:
    static FamilyFormula selmer(Amount k);
    static FamilyFormula one_two_b_b1(Amount b);
    static FamilyFormula one_two_b_b1_2b(Amount b);
    static FamilyFormula one_b_2bm1(Amount b);
    static FamilyFormula one_to_k_plus(Amount k, Amount big_k);
    static FamilyFormula four_8_15_17();
    static FamilyFormula reference(FamilyId id);

    FamilyId id() const { return id_; }
    const CoinSystem& system() const { return system_; }
    Amount b() const { return b_; }
    Amount k() const { return k_; }
    Amount big_k() const { return big_k_; }
    // K = s k + t, 0 <= t < k (F_12K_K only).
    Amount s() const { return s_; }
    Amount t() const { return t_; }

    // Period of the piecewise formula in a.
    Amount period() const;
    // Least a admitted by the theorem's hypotheses.
    Amount a_min() const;
    Amount h_min(Amount d) const;
    // First failed hypothesis for (a, h, d), if any.
    std::optional<std::string> domain_violation(Amount a, Amount h, Amount d) const;

    // Coefficients of the hard-coded REF_* tables, as a formula object.
    std::optional<CongruenceFormula> reference_table() const;

private:
    FamilyFormula(FamilyId id, CoinSystem system) : id_(id), system_(std::move(system)) {}

    FamilyId id_;
    CoinSystem system_;
    Amount b_ = 0;
    Amount k_ = 0;
    Amount big_k_ = 0;
    Amount s_ = 0;
    Amount t_ = 0;
};

Amount family_eval(const FamilyFormula& family, Amount a, Amount h, Amount d);
// F_12K_K with an explicit branch body; no domain check on which branch applies.
Amount family_eval_branch(const FamilyFormula& family, KBranch branch, Amount a, Amount h, Amount d);

struct FamilyGrid {
    Amount a_lo = 0;
    Amount a_hi = -1;
    std::vector<Amount> h_values;
    std::vector<Amount> d_values;
    // Interpret h_values as offsets from the theorem's h_min(d).
    bool h_relative = false;

    // a in [a_min, a_min + periods * period), h = h_min(d).
    static FamilyGrid periods(const FamilyFormula& family, Amount periods, std::vector<Amount> d_values);
};

struct CrossCheckMismatch {
    Amount a = 0;
    Amount h = 0;
    Amount d = 0;
    Amount family = 0;
    Amount oracle = 0;
    std::optional<Amount> synth;
};

struct CrossCheckReport {
    std::size_t points = 0;
    std::size_t in_domain = 0;
    std::size_t synth_compared = 0;
    std::vector<CrossCheckMismatch> mismatches;
};

// family = oracle at every in-domain grid point, and family = synthesized
// formula wherever the system is unit-leading and the point is inside the
// synthesized formula's own validity region. Parallel over grid points.
CrossCheckReport cross_check(const FamilyFormula& family, const FamilyGrid& grid);
CrossCheckReport cross_check_serial(const FamilyFormula& family, const FamilyGrid& grid);

} // namespace frobenius
