#pragma once

#include <string>
#include <vector>

#include "gku/arith.hpp"
#include "gku/natural.hpp"

namespace gku::pratt {

/// Recursive primality certificate: a witness of full order p-1 together
/// with one child certificate per distinct prime factor of p-1. The prime 2
/// is the axiom leaf (no witness needed).
struct PrattCert {
    Natural prime;
    Natural witness;  // unused on the axiom leaf
    arith::Factorization p_minus_1;
    std::vector<PrattCert> children;  // one per distinct prime of p-1, ascending

    bool is_axiom() const { return prime == 2; }
    std::size_t node_count() const;
};

/// Level view of the certificate recursion: level j+1 collects, for each odd
/// prime at level j, the distinct primes dividing it minus one. Leaves are 2.
struct PrattTree {
    Natural root;
    std::vector<std::vector<Natural>> levels;  // each level sorted ascending

    unsigned depth() const { return static_cast<unsigned>(levels.size()); }
};

/// Certificate for prime p; throws std::domain_error on composite input.
PrattCert build_cert(const Natural& p);

/// Checks both witness congruences at every node, factorization consistency,
/// and child coverage. Performs no primality test: passing IS the proof.
/// On failure, *diagnostic (if given) receives the path to the failing node.
bool verify_cert(const PrattCert& cert, std::string* diagnostic = nullptr);

PrattTree build_tree(const Natural& p);

/// True iff the prime set and the per-level prime multisets of the
/// decomposition recursion of Z_p (at depth-many iterations) coincide with
/// the tree of p.
bool correspondence_check(const Natural& p);

std::string to_dot(const PrattTree& tree);

}  // namespace gku::pratt
