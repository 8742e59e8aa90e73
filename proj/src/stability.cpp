#include "frobenius/stability.hpp"

#include <algorithm>
#include <sstream>

#include "frobenius/error.hpp"
#include "frobenius/semigroup.hpp"

namespace frobenius {

namespace {

Amount ceil_div(Amount num, Amount den) { return (num + den - 1) / den; }

} // namespace

OptTable::OptTable(CoinSystem system, Amount limit) : system_(std::move(system))
{
    if (limit < 0) {
        throw PreconditionError("table limit must be nonnegative");
    }
    // Unbounded-knapsack forward pass; Amount -1 marks "unreached".
    std::vector<Amount> best(static_cast<std::size_t>(limit) + 1, -1);
    best[0] = 0;
    const auto denoms = system_.denoms();
    for (Amount n = 1; n <= limit; n++) {
        Amount current = -1;
        for (Amount b : denoms) {
            if (b > n) {
                break;
            }
            const Amount prev = best[static_cast<std::size_t>(n - b)];
            if (prev >= 0 && (current < 0 || prev + 1 < current)) {
                current = prev + 1;
            }
        }
        best[static_cast<std::size_t>(n)] = current;
    }
    values_.reserve(best.size());
    for (Amount v : best) {
        values_.push_back(v >= 0 ? Count(v) : Count::none());
    }
}

Count OptTable::at(Amount n) const
{
    if (n < 0 || n > limit()) {
        throw std::out_of_range("amount outside table");
    }
    return values_[static_cast<std::size_t>(n)];
}

OptTable build_table(const CoinSystem& system, Amount limit) { return OptTable(system, limit); }

std::optional<Amount> first_bound_violation(const OptTable& table, Amount c)
{
    const Amount bk = table.system().largest();
    for (Amount n = 0; n <= table.limit(); n++) {
        const Count count = table[n];
        if (!count.representable()) {
            continue;
        }
        if (count.value() < ceil_div(n, bk) || count.value() > n / bk + c) {
            return n;
        }
    }
    return std::nullopt;
}

CValue c_value(const CoinSystem& system)
{
    if (!system.coprime()) {
        throw NotCoprimeError("c needs gcd(B) = 1");
    }
    const Amount bk = system.largest();
    Amount window_start = 0;
    if (!system.unit_leading()) {
        const Amount g = non_representables(system).frobenius;
        window_start = ceil_div(g, bk) * bk;
    }
    const OptTable table = build_table(system, window_start + bk - 1);
    Amount raw = 0;
    for (Amount r = window_start; r < window_start + bk; r++) {
        raw = std::max(raw, table[r].value());
    }
    if (raw <= 1) {
        return CValue{2, true};
    }
    return CValue{raw, false};
}

bool shift_holds(const OptTable& table, Amount r)
{
    const Amount bk = table.system().largest();
    const Count lower = table.at(r);
    const Count upper = table.at(r + bk);
    return lower.representable() && upper.representable() && upper.value() == lower.value() + 1;
}

StabilityProfile profile(const CoinSystem& system)
{
    if (system.size() < 2) {
        throw PreconditionError("profile needs k >= 2");
    }
    if (!system.coprime()) {
        throw NotCoprimeError("profile needs gcd(B) = 1");
    }
    const CValue cv = c_value(system);
    const Amount bk = system.largest();
    const Amount bk1 = system.second_largest();

    StabilityProfile out{.system = system};
    out.c = cv.c;
    out.forced_c2 = cv.forced_c2;
    const Amount q = ceil_div((cv.c - 1) * bk1, bk - bk1);
    out.u = std::max(cv.c - 1, q);
    out.paper_threshold = q * bk;
    out.experimental = !system.unit_leading();

    Amount top = out.paper_threshold;
    if (out.experimental) {
        const Amount g = non_representables(system).frobenius;
        top = std::max(top, (ceil_div(g, bk) + 1) * bk);
    }

    // Confirm stability on [top, top + 2 b_k], then walk down to the first failure.
    OptTable table = build_table(system, top + 3 * bk);
    for (int attempt = 0;; attempt++) {
        std::optional<Amount> failure;
        for (Amount r = top; r <= top + 2 * bk; r++) {
            if (!shift_holds(table, r)) {
                failure = r;
            }
        }
        if (!failure) {
            break;
        }
        if (!out.experimental || attempt > 64) {
            throw std::logic_error("shift property fails above the stability bound for " +
                                   system.to_string());
        }
        top = *failure + 1;
        table = build_table(system, top + 3 * bk);
    }
    out.exact_threshold = 0;
    for (Amount r = top; r-- > 0;) {
        if (!shift_holds(table, r)) {
            out.exact_threshold = r + 1;
            break;
        }
    }

    if (system.unit_leading()) {
        const OrderlinessVerdict verdict = is_orderly(system);
        out.orderly = verdict.orderly();
        out.counterexample = verdict.counterexample;
    }
    return out;
}

ResidueView residue_view(const OptTable& table)
{
    const Amount bk = table.system().largest();
    ResidueView rows(static_cast<std::size_t>(bk));
    for (Amount n = 0; n <= table.limit(); n++) {
        rows[static_cast<std::size_t>(n % bk)].push_back(ResidueEntry{table[n], n});
    }
    return rows;
}

std::string render_residue_view(const ResidueView& view)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < view.size(); i++) {
        os << "f^" << i << " =";
        for (std::size_t e = 0; e < view[i].size(); e++) {
            const ResidueEntry& entry = view[i][e];
            os << (e == 0 ? " " : " + ");
            if (entry.count.representable()) {
                os << "t^" << entry.count.value() << " q^" << entry.amount;
            } else {
                os << "0·q^" << entry.amount;
            }
        }
        os << '\n';
    }
    return os.str();
}

} // namespace frobenius
