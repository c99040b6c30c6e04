#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gku/abelian.hpp"
#include "gku/arith.hpp"
#include "gku/natural.hpp"

namespace gku::units {

using abelian::GroupShape;

struct UnitsQuery {
    Natural modulus;    // n >= 1
    unsigned level = 1; // k; level 0 is the additive group of Z_n itself
};

/// One node of the decomposition recursion. `rule` is one of
/// base-2-power | base-odd-prime-power | crt-split | cyclic-units.
/// 2-power nodes are closed-form leaves; an odd prime p (exponent 1) is a
/// cyclic-units node whose children are the prime-power parts of p-1; an odd
/// prime power p^a (a >= 2) additionally carries the residual child p^(a-1).
struct TraceNode {
    Natural modulus;
    std::string rule;
    unsigned level = 0;  // remaining iteration budget at this node
    std::vector<TraceNode> children;
};

struct RecursionTrace {
    Natural root;
    unsigned level = 0;
    TraceNode node;

    /// Multiset of node primes at each depth >= 1 (sorted ascending per
    /// level). Children of a crt-split root count at depth 1.
    std::vector<std::vector<Natural>> level_sets() const;

    /// Every prime appearing anywhere in the tree, root included, ascending.
    std::vector<Natural> prime_set() const;
};

/// U(Z_{p^alpha}) by the base cases: U(Z_2) = {}, U(Z_{2^a}) = Z_2 x Z_{2^(a-2)},
/// U(Z_{p^a}) = Z_{p-1} x Z_{p^(a-1)} for odd p. Rejects non-prime p.
GroupShape unit_shape_prime_power(const Natural& p, unsigned alpha);

/// U(Z_n) for any n >= 1, via CRT over factorize(n).
GroupShape unit_shape(const Natural& n);

/// Unit group of the ring carried by a shape: product of unit groups of each
/// cyclic prime-power factor.
GroupShape iterate_units(const GroupShape& s);

/// U^k(Z_n). Level 0 returns from_cyclic(n). Memoized on prime-power
/// subproblems (p, alpha, k); composite moduli route through CRT first.
GroupShape uk_shape(const UnitsQuery& q);
GroupShape uk_shape(const Natural& n, unsigned k);

/// Closed form for U^k(Z_{2^alpha}), alpha,k >= 1:
/// {2} u cyclic(2^(alpha-2k)) if alpha > 2k; {2} if alpha = 2k; {} below.
GroupShape uk_two_power_closed(unsigned alpha, unsigned k);

/// Closed form for U^k(Z_{3^alpha}).
GroupShape uk_three_power_closed(unsigned alpha, unsigned k);

/// Closed form for U^k(Z_{5^alpha}).
GroupShape uk_five_power_closed(unsigned alpha, unsigned k);

/// Closed form for U^k(Z_{7^alpha}).
GroupShape uk_seven_power_closed(unsigned alpha, unsigned k);

/// U^k(Z_{p^alpha}) for odd prime p via the level-peeling expansion into
/// U^j(Z_p) factors plus the residual cyclic p-power part. An independent
/// route from uk_shape; the two must agree.
GroupShape uk_odd_prime_power_expand(const Natural& p, unsigned alpha, unsigned k);

/// Full recursion tree of prime-power subproblems visited by uk_shape(n, k).
RecursionTrace decomposition_trace(const Natural& n, unsigned k);

std::string to_dot(const RecursionTrace& trace);

/// Memo controls. Cap of 0 means unlimited; when the cap is hit new results
/// are recomputed instead of stored.
void set_memo_cap(std::size_t max_entries);
std::size_t memo_size();
void clear_memo();

}  // namespace gku::units
