#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace frobenius {

using Amount = std::int64_t;

// A change-making base B = (b_1 < b_2 < ... < b_k), all positive.
class CoinSystem {
public:
    explicit CoinSystem(std::vector<Amount> denoms);
    CoinSystem(std::initializer_list<Amount> denoms) : CoinSystem(std::vector<Amount>(denoms)) {}

    std::span<const Amount> denoms() const { return denoms_; }
    std::size_t size() const { return denoms_.size(); }
    Amount operator[](std::size_t i) const { return denoms_[i]; }
    Amount smallest() const { return denoms_.front(); }
    Amount largest() const { return denoms_.back(); }
    // b_{k-1}; only meaningful for k >= 2.
    Amount second_largest() const { return denoms_[denoms_.size() - 2]; }

    bool unit_leading() const { return denoms_.front() == 1; }
    bool coprime() const { return gcd_ == 1; }
    Amount gcd() const { return gcd_; }

    // Comma separated, e.g. "1,11,14".
    std::string to_string() const;
    static CoinSystem parse(const std::string& text);

    friend bool operator==(const CoinSystem&, const CoinSystem&) = default;

private:
    std::vector<Amount> denoms_;
    Amount gcd_ = 1;
};

// Minimum coin count, or "no representation". The sentinel never takes part
// in arithmetic: value() on a non-representable count throws.
class Count {
public:
    constexpr Count() = default;
    constexpr explicit Count(Amount v) : value_(v) {}
    static constexpr Count none() { return Count{}; }

    constexpr bool representable() const { return value_ >= 0; }
    Amount value() const;
    constexpr Amount value_or(Amount fallback) const { return representable() ? value_ : fallback; }

    friend constexpr bool operator==(Count, Count) = default;

private:
    Amount value_ = -1;
};

// O_B(M): fewest coins summing to M.
Count opt_count(const CoinSystem& system, Amount amount);

// G_B(M): coins used by the largest-first strategy. Requires b_1 = 1.
Amount greedy_count(const CoinSystem& system, Amount amount);

struct OrderlinessVerdict {
    // Smallest M with O_B(M) < G_B(M); empty when greedy is always optimal.
    std::optional<Amount> counterexample;
    Amount optimal_at_counterexample = 0;
    Amount greedy_at_counterexample = 0;

    bool orderly() const { return !counterexample.has_value(); }
};

// Decides whether greedy is optimal for every amount. A counterexample, if one
// exists, lies below b_{k-1} + b_k (Kozen and Zaks), so only that range is scanned.
OrderlinessVerdict is_orderly(const CoinSystem& system);

} // namespace frobenius
