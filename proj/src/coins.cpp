#include "frobenius/coins.hpp"

#include <numeric>
#include <sstream>

#include "frobenius/error.hpp"
#include "frobenius/stability.hpp"

namespace frobenius {

CoinSystem::CoinSystem(std::vector<Amount> denoms) : denoms_(std::move(denoms))
{
    if (denoms_.empty()) {
        throw PreconditionError("coin system needs at least one denomination");
    }
    for (std::size_t i = 0; i < denoms_.size(); i++) {
        if (denoms_[i] < 1) {
            throw PreconditionError("denominations must be positive");
        }
        if (i > 0 && denoms_[i] <= denoms_[i - 1]) {
            throw PreconditionError("denominations must be strictly increasing");
        }
    }
    gcd_ = 0;
    for (Amount b : denoms_) {
        gcd_ = std::gcd(gcd_, b);
    }
}

std::string CoinSystem::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < denoms_.size(); i++) {
        if (i > 0) {
            os << ',';
        }
        os << denoms_[i];
    }
    return os.str();
}

CoinSystem CoinSystem::parse(const std::string& text)
{
    std::vector<Amount> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) {
            comma = text.size();
        }
        std::string token = text.substr(pos, comma - pos);
        token.erase(0, token.find_first_not_of(" \t"));
        token.erase(token.find_last_not_of(" \t") + 1);
        if (token.empty()) {
            throw PreconditionError("empty denomination in '" + text + "'");
        }
        std::size_t used = 0;
        Amount value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw PreconditionError("bad denomination '" + token + "'");
        }
        if (used != token.size()) {
            throw PreconditionError("bad denomination '" + token + "'");
        }
        values.push_back(value);
        pos = comma + 1;
    }
    return CoinSystem(std::move(values));
}

Amount Count::value() const
{
    if (!representable()) {
        throw std::logic_error("value() on a non-representable count");
    }
    return value_;
}

Count opt_count(const CoinSystem& system, Amount amount)
{
    if (amount < 0) {
        throw PreconditionError("amount must be nonnegative");
    }
    return build_table(system, amount)[amount];
}

Amount greedy_count(const CoinSystem& system, Amount amount)
{
    if (!system.unit_leading()) {
        throw PreconditionError("greedy count needs b_1 = 1");
    }
    if (amount < 0) {
        throw PreconditionError("amount must be nonnegative");
    }
    Amount coins = 0;
    for (std::size_t i = system.size(); i-- > 0;) {
        coins += amount / system[i];
        amount %= system[i];
    }
    return coins;
}

OrderlinessVerdict is_orderly(const CoinSystem& system)
{
    if (!system.unit_leading()) {
        throw PreconditionError("orderliness is defined for b_1 = 1 only");
    }
    OrderlinessVerdict verdict;
    if (system.size() < 3) {
        // (1) and (1, b) are always orderly.
        return verdict;
    }
    const Amount bound = system.second_largest() + system.largest();
    const OptTable table = build_table(system, bound);
    for (Amount m = 0; m < bound; m++) {
        const Amount optimal = table[m].value();
        const Amount greedy = greedy_count(system, m);
        if (optimal < greedy) {
            verdict.counterexample = m;
            verdict.optimal_at_counterexample = optimal;
            verdict.greedy_at_counterexample = greedy;
            break;
        }
    }
    return verdict;
}

} // namespace frobenius
