#pragma once

#include <compare>
#include <vector>

#include "gku/natural.hpp"

namespace gku::arith {

struct PrimePower {
    Natural prime;
    unsigned exponent = 1;

    Natural value() const { return pow_natural(prime, exponent); }

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        return a.prime == b.prime && a.exponent == b.exponent;
    }
    friend bool operator<(const PrimePower& a, const PrimePower& b) {
        if (a.prime != b.prime) return a.prime < b.prime;
        return a.exponent < b.exponent;
    }
};

/// A positive integer held as its prime-power decomposition; primes strictly
/// increasing, exponents >= 1. The empty list is 1.
class Factorization {
  public:
    Factorization() = default;

    /// Validating constructor for externally assembled part lists (CLI
    /// factored input, bound assembly). Checks ordering, exponents and
    /// primality of every base.
    static Factorization from_parts(std::vector<PrimePower> parts);

    /// Trusted constructor for parts produced by factorize() itself.
    static Factorization from_verified_parts(std::vector<PrimePower> parts);

    const std::vector<PrimePower>& parts() const { return parts_; }
    bool is_one() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    Natural value() const;
    Natural divisor_count() const;
    unsigned exponent_of(const Natural& p) const;

    /// Multiplies in p^e, merging with an existing entry for p.
    Factorization times(const Natural& p, unsigned e) const;

    /// True iff this divides other part-wise.
    bool divides_into(const Factorization& other) const;

    friend bool operator==(const Factorization& a, const Factorization& b) {
        return a.parts_ == b.parts_;
    }

  private:
    std::vector<PrimePower> parts_;
};

/// Deterministic primality. Trial division for small n, fixed Miller-Rabin
/// witness set in its proven-exact range, and a full-factorization witness
/// certificate beyond that. Never returns a probabilistic accept.
bool is_prime(const Natural& n);

/// Prime-power decomposition of n >= 1. Trial division by small primes first,
/// then Brent-cycle Pollard rho with a deterministic restart schedule.
Factorization factorize(const Natural& n);

/// base^exp mod modulus by square-and-multiply; rejects modulus = 0.
Natural pow_mod(const Natural& base, const Natural& exp, const Natural& modulus);

/// All positive divisors of the represented integer, ascending. Refuses
/// absurd enumerations (divisor_count above an internal guard).
std::vector<Natural> divisors(const Factorization& f);

/// Smallest g >= 2 generating the full multiplicative group mod prime p.
/// Both defining congruences are re-verified before returning.
Natural find_primitive_root(const Natural& p, const Factorization& factored_p_minus_1);

}  // namespace gku::arith
