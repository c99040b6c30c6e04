#pragma once

#include <cstdint>
#include <string>

#include "gku/abelian.hpp"
#include "gku/arith.hpp"
#include "gku/natural.hpp"

namespace gku::classify {

using abelian::GroupShape;

enum class Verdict { Trivial, Boolean, Neither };

std::string to_string(Verdict v);

/// Verdict read off a shape directly: the generic route.
Verdict verdict_from_shape(const GroupShape& s);

struct Classification {
    Verdict verdict = Verdict::Neither;
    GroupShape shape;
    std::string rule;  // theorem fast path that decided it, or "generic"
};

/// N_k: the largest modulus (as a factorization) with U^k trivial exactly on
/// its divisors.
struct TrivializingBound {
    unsigned level = 1;
    arith::Factorization bound;

    Natural value() const { return bound.value(); }
};

struct BoundCheckReport {
    bool pass = true;
    std::string counterexample;  // first failure, empty when pass
    std::uint64_t divisors_checked = 0;
    std::uint64_t primes_checked = 0;
    std::uint64_t exhaustive_checked = 0;
};

/// Verdict for U^k(Z_n), k >= 1, decided by the theorem fast paths
/// (2-power closed form; odd-prime level reduction), with the shape attached
/// and cross-checked against the generic route.
Classification classify(const Natural& n, unsigned k);
Classification classify(const arith::Factorization& n, unsigned k);

/// Smallest k >= 0 with U^k(Z_n) trivial.
unsigned stabilization_index(const Natural& n);

/// N_k by recursion from N_1 = 2: 2-part exponent 2k-1, odd primes p with
/// p-1 | N_{k-1} at exponent max{a <= k-1 : p-1 | N_{k-a}}.
TrivializingBound trivializing_bound(unsigned k);

/// Validates a claimed bound: smallest divisors classify trivial, one-past
/// exponent bumps classify nontrivial for every prime <= sample_limit, and
/// (k <= 3) exhaustive agreement of "trivial <=> n | N_k" up to 10^5.
BoundCheckReport check_bound(const TrivializingBound& b, const Natural& sample_limit);

/// Predicate behind the exponent/level shift law for odd p: when either of
/// U^k(Z_{p^alpha}), U^{k+t}(Z_{p^{alpha+t}}) is boolean or trivial the two
/// shapes must coincide; vacuously true otherwise.
bool shift_equivalence(const Natural& p, unsigned alpha, unsigned k, unsigned t);

}  // namespace gku::classify
