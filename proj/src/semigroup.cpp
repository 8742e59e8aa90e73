#include "frobenius/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "frobenius/error.hpp"
#include "frobenius/stability.hpp"

namespace frobenius {

namespace {

constexpr Amount kUnreached = std::numeric_limits<Amount>::max();

Amount ceil_div(Amount num, Amount den) { return (num + den - 1) / den; }

void require_generators(std::span<const Amount> generators)
{
    if (generators.empty()) {
        throw PreconditionError("at least one generator is required");
    }
    Amount g = 0;
    for (Amount x : generators) {
        if (x < 1) {
            throw PreconditionError("generators must be positive");
        }
        g = std::gcd(g, x);
    }
    if (g != 1) {
        throw NotCoprimeError("generators must have gcd 1");
    }
}

} // namespace

Instance::Instance(Amount a, Amount h, Amount d, CoinSystem system)
    : a_(a), h_(h), d_(d), system_(std::move(system))
{
    if (a < 2) {
        throw PreconditionError("modulus a must be at least 2");
    }
    if (h < 1 || d < 1) {
        throw PreconditionError("h and d must be positive");
    }
    if (std::gcd(a, d) != 1) {
        throw NotCoprimeError("gcd(a, d) must be 1");
    }
    generators_.reserve(system_.size() + 1);
    generators_.push_back(a);
    for (Amount b : system_.denoms()) {
        const Amount g = h * a + d * b;
        if (g <= generators_.back()) {
            throw PreconditionError("generators must be strictly increasing");
        }
        generators_.push_back(g);
    }
    Amount g = 0;
    for (Amount x : generators_) {
        g = std::gcd(g, x);
    }
    if (g != 1) {
        throw NotCoprimeError("generators of A(a) must have gcd 1");
    }
}

AperySet apery(std::span<const Amount> generators)
{
    require_generators(generators);
    const Amount modulus = generators[0];
    std::vector<Amount> dist(static_cast<std::size_t>(modulus), kUnreached);
    dist[0] = 0;

    // Each generator is folded in with one pass around every cycle of
    // r -> r + g (mod modulus), starting from the cycle's minimum.
    for (std::size_t i = 1; i < generators.size(); i++) {
        const Amount step = generators[i];
        const Amount shift = step % modulus;
        const Amount cycles = std::gcd(modulus, shift == 0 ? modulus : shift);
        const Amount cycle_len = modulus / cycles;
        for (Amount p = 0; p < cycles; p++) {
            Amount start = p;
            Amount cur = p;
            for (Amount s = 0; s < cycle_len; s++) {
                if (dist[static_cast<std::size_t>(cur)] < dist[static_cast<std::size_t>(start)]) {
                    start = cur;
                }
                cur = (cur + shift) % modulus;
            }
            if (dist[static_cast<std::size_t>(start)] == kUnreached) {
                continue;
            }
            cur = start;
            for (Amount s = 1; s < cycle_len; s++) {
                const Amount next = (cur + shift) % modulus;
                const Amount candidate = dist[static_cast<std::size_t>(cur)] + step;
                if (candidate < dist[static_cast<std::size_t>(next)]) {
                    dist[static_cast<std::size_t>(next)] = candidate;
                }
                cur = next;
            }
        }
    }
    if (std::find(dist.begin(), dist.end(), kUnreached) != dist.end()) {
        throw std::logic_error("residue graph not connected despite gcd 1");
    }
    return AperySet{modulus, std::move(dist)};
}

AperySet apery(const Instance& instance) { return apery(instance.generators()); }

Amount frobenius_number(std::span<const Amount> generators)
{
    const AperySet set = apery(generators);
    return *std::max_element(set.values.begin(), set.values.end()) - set.modulus;
}

Amount frobenius_oracle(const Instance& instance) { return frobenius_number(instance.generators()); }

Amount sieve_frobenius(std::span<const Amount> generators, Amount bound)
{
    require_generators(generators);
    if (bound < 0) {
        return -1;
    }
    std::vector<char> reachable(static_cast<std::size_t>(bound) + 1, 0);
    reachable[0] = 1;
    for (Amount n = 1; n <= bound; n++) {
        for (Amount g : generators) {
            if (g <= n && reachable[static_cast<std::size_t>(n - g)]) {
                reachable[static_cast<std::size_t>(n)] = 1;
                break;
            }
        }
    }
    for (Amount n = bound; n >= 0; n--) {
        if (!reachable[static_cast<std::size_t>(n)]) {
            return n;
        }
    }
    return -1;
}

Amount frobenius_cross_checked(std::span<const Amount> generators)
{
    const Amount g = frobenius_number(generators);
    // A run of min(generators) representable values after g covers everything beyond.
    const Amount run = *std::min_element(generators.begin(), generators.end());
    const Amount bound = std::max<Amount>(g, 0) + run;
    if (bound <= kSieveCap) {
        const Amount sieved = sieve_frobenius(generators, bound);
        if (sieved != g) {
            throw OracleMismatch("Apéry route gives " + std::to_string(g) + ", sieve gives " +
                                 std::to_string(sieved));
        }
    }
    return g;
}

NonRepresentable non_representables(const CoinSystem& system)
{
    if (!system.coprime()) {
        throw NotCoprimeError("non-representable set needs gcd(B) = 1");
    }
    NonRepresentable out;
    if (system.unit_leading()) {
        return out;
    }
    out.frobenius = frobenius_number(system.denoms());
    const OptTable table = build_table(system, out.frobenius);
    for (Amount n = 0; n <= out.frobenius; n++) {
        if (!table[n].representable()) {
            out.values.push_back(n);
        }
    }
    return out;
}

Amount n_dr(const Instance& instance, Amount r, const OptTable& table)
{
    const Amount a = instance.a();
    if (r < 0 || r >= a) {
        throw PreconditionError("residue must lie in [0, a)");
    }
    const Amount h = instance.h();
    const Amount d = instance.d();
    const Amount bk = instance.system().largest();

    std::optional<OptTable> grown;
    const OptTable* lookup = &table;
    Amount best = kUnreached;
    for (Amount m = 0;; m++) {
        const Amount n = m * a + r;
        const Amount lower_bound = ceil_div(n, bk) * h * a + n * d;
        if (best != kUnreached && lower_bound > best) {
            break;
        }
        if (n > lookup->limit()) {
            grown.emplace(build_table(instance.system(), 2 * n + bk));
            lookup = &*grown;
        }
        const Count count = (*lookup)[n];
        if (count.representable()) {
            best = std::min(best, count.value() * h * a + n * d);
        }
    }
    return best;
}

Amount n_dr(const Instance& instance, Amount r)
{
    const OptTable table = build_table(instance.system(), 2 * instance.a() + instance.system().largest());
    return n_dr(instance, r, table);
}

} // namespace frobenius
