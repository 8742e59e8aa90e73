#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobenius/coins.hpp"

namespace frobenius {

// O_B(n) for every n in [0, limit]. Immutable once built.
class OptTable {
public:
    OptTable(CoinSystem system, Amount limit);

    const CoinSystem& system() const { return system_; }
    Amount limit() const { return static_cast<Amount>(values_.size()) - 1; }
    Count operator[](Amount n) const { return values_[static_cast<std::size_t>(n)]; }
    Count at(Amount n) const;
    const std::vector<Count>& values() const { return values_; }

private:
    CoinSystem system_;
    std::vector<Count> values_;
};

OptTable build_table(const CoinSystem& system, Amount limit);

// First n in the table violating ceil(n/b_k) <= O_B(n) <= floor(n/b_k) + c,
// or nothing if every representable entry is inside the bounds.
std::optional<Amount> first_bound_violation(const OptTable& table, Amount c);

struct CValue {
    Amount c = 0;
    // Raw window maximum was 1 and has been raised to 2.
    bool forced_c2 = false;
};

// Maximum of O_B over one window of length b_k: [0, b_k) when b_1 = 1,
// otherwise the window starting at ceil(g(B)/b_k)*b_k.
CValue c_value(const CoinSystem& system);

struct StabilityProfile {
    CoinSystem system;
    Amount c = 0;
    bool forced_c2 = false;
    Amount u = 0;
    // ceil((c-1) b_{k-1} / (b_k - b_{k-1})) * b_k
    Amount paper_threshold = 0;
    // Least T with O_B(b_k + r) = O_B(r) + 1 for every r >= T.
    Amount exact_threshold = 0;
    // Greedy is undefined for b_1 > 1, so orderliness is only known for unit-leading systems.
    std::optional<bool> orderly;
    std::optional<Amount> counterexample;
    // b_1 > 1: c follows a proposed rule rather than a proven one.
    bool experimental = false;

    friend bool operator==(const StabilityProfile&, const StabilityProfile&) = default;
};

StabilityProfile profile(const CoinSystem& system);

// Shift property O_B(b_k + r) = O_B(r) + 1 at a single r (both representable).
bool shift_holds(const OptTable& table, Amount r);

struct ResidueEntry {
    Count count;
    Amount amount = 0;
};

// Row i holds the entries for amounts i, i + b_k, i + 2 b_k, ... up to the table limit.
using ResidueView = std::vector<std::vector<ResidueEntry>>;

ResidueView residue_view(const OptTable& table);

// One line per residue, "f^i = t^w q^n + ...", sentinel entries as "0·q^n".
std::string render_residue_view(const ResidueView& view);

} // namespace frobenius
