#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace gku {

/// Arbitrary-precision non-negative integer. Signed under the hood (GMP);
/// every public operation in this library keeps values >= 0.
using Natural = mpz_class;

/// Strict decimal parse. Rejects empty strings, signs, whitespace and any
/// non-digit character.
Natural natural_from_string(const std::string& text);

inline std::string to_string(const Natural& n) { return n.get_str(); }

inline Natural pow_natural(const Natural& base, unsigned long exp) {
    Natural r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline bool divides(const Natural& d, const Natural& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::size_t bit_length(const Natural& n) {
    return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

/// Narrowing accessor for values known to be small; throws std::domain_error
/// when the value does not fit.
unsigned long to_ulong_checked(const Natural& n);

}  // namespace gku
