#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gku/abelian.hpp"
#include "gku/natural.hpp"

namespace gku::oracle {

using abelian::GroupShape;

inline constexpr std::uint64_t kDefaultLimit = 1'000'000;

struct BruteOptions {
    std::uint64_t modulus_limit = kDefaultLimit;
    /// Optional caller-owned cache of brute_unit_shape results, keyed by
    /// modulus. The oracle itself keeps no state.
    std::map<std::uint64_t, GroupShape>* unit_cache = nullptr;
};

/// The residues coprime to the modulus, found by direct gcd counting.
struct EnumeratedGroup {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> elements;
};

EnumeratedGroup enumerate_units(const Natural& n, std::uint64_t modulus_limit = kDefaultLimit);

/// Structure of the multiplicative group mod n recovered by exhaustive
/// order counting: for each prime q dividing the group order, count the
/// solutions of x^(q^j) = 1 for growing j and read the cyclic q-part
/// exponents off the count ratios. Shares no code with the formula engine.
GroupShape brute_unit_shape(const Natural& n, const BruteOptions& opt = {});

/// U^k(Z_n) by enumeration: apply brute_unit_shape to every prime-power
/// factor of the previous level's shape.
GroupShape brute_uk(const Natural& n, unsigned k, const BruteOptions& opt = {});

}  // namespace gku::oracle
