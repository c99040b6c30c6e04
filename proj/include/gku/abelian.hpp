#pragma once

#include <string>
#include <vector>

#include "gku/arith.hpp"
#include "gku/natural.hpp"

namespace gku::abelian {

/// Canonical invariant of a finite abelian group: the multiset of prime-power
/// orders of its cyclic factors, sorted by (prime, exponent). Two shapes are
/// equal iff the groups are isomorphic. The trivial group is the empty shape.
class GroupShape {
  public:
    GroupShape() = default;

    /// Build from explicit entries (sorted and validated: prime bases,
    /// exponents >= 1). Used by the enumeration oracle and by tests.
    static GroupShape from_entries(std::vector<arith::PrimePower> entries);

    const std::vector<arith::PrimePower>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    friend bool operator==(const GroupShape& a, const GroupShape& b) {
        return a.entries_ == b.entries_;
    }

  private:
    friend GroupShape from_cyclic(const Natural&);
    friend GroupShape product(const GroupShape&, const GroupShape&);
    std::vector<arith::PrimePower> entries_;
};

/// Primary decomposition of the cyclic group of order m (CRT split).
GroupShape from_cyclic(const Natural& m);

/// Direct product = multiset union. Commutative, associative, identity {}.
GroupShape product(const GroupShape& a, const GroupShape& b);

Natural order(const GroupShape& s);

bool is_trivial(const GroupShape& s);

/// Nonempty and every factor is Z_2: the carried ring is boolean and
/// nontrivial. The trivial group deliberately reports false; the two verdicts
/// are kept disjoint throughout this library.
bool is_boolean(const GroupShape& s);

/// "Z_2 × Z_4 × Z_5" rendering; "{0}" for the trivial shape.
std::string human_string(const GroupShape& s);

}  // namespace gku::abelian
