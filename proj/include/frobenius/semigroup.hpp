#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frobenius/coins.hpp"

namespace frobenius {

class OptTable;

// A(a) = (a, ha + d b_1, ..., ha + d b_k).
class Instance {
public:
    Instance(Amount a, Amount h, Amount d, CoinSystem system);

    Amount a() const { return a_; }
    Amount h() const { return h_; }
    Amount d() const { return d_; }
    const CoinSystem& system() const { return system_; }
    std::span<const Amount> generators() const { return generators_; }

private:
    Amount a_;
    Amount h_;
    Amount d_;
    CoinSystem system_;
    std::vector<Amount> generators_;
};

// Least semigroup element in each residue class modulo the first generator.
struct AperySet {
    Amount modulus = 0;
    std::vector<Amount> values;
};

// Round-robin shortest paths on the residue graph modulo gens[0]. Requires
// gcd(gens) = 1 and gens[0] >= 1.
AperySet apery(std::span<const Amount> generators);
AperySet apery(const Instance& instance);

// Brauer-Shockley: g = max Ape - modulus.
Amount frobenius_number(std::span<const Amount> generators);
Amount frobenius_oracle(const Instance& instance);

// Largest integer not representable, found with a plain representability
// sieve of length `bound`. Returns -1 when everything up to bound is
// representable. Independent of the Apéry route.
Amount sieve_frobenius(std::span<const Amount> generators, Amount bound);

// Largest sieve length the cross-checks will allocate.
inline constexpr Amount kSieveCap = 10'000'000;

// Apéry result confirmed by the sieve whenever the sieve bound stays within
// kSieveCap; throws OracleMismatch if the two disagree.
Amount frobenius_cross_checked(std::span<const Amount> generators);

struct NonRepresentable {
    std::vector<Amount> values;
    // max(values), or -1 when nothing is missing (b_1 = 1).
    Amount frobenius = -1;
};

NonRepresentable non_representables(const CoinSystem& system);

// min over m >= 0 of O_B(ma + r) h a + (ma + r) d, i.e. the Apéry element in
// class r d (mod a). The scan stops once the lower bound ceil(n/b_k) h a + n d
// passes the best value seen.
Amount n_dr(const Instance& instance, Amount r);
// Same, reusing a caller-provided table; grows a private copy if it is too short.
Amount n_dr(const Instance& instance, Amount r, const OptTable& table);

} // namespace frobenius
