#pragma once

#include <vector>

#include "ics/phase_space.hpp"
#include "ics/point.hpp"

namespace ics {

/// Finite multiset of points. Entries with coinciding points (representation
/// equality) are stored once with summed multiplicity.
struct MultiSet {
  struct Entry {
    Point point;
    int multiplicity = 1;
  };
  std::vector<Entry> entries;

  int total() const;
};

/// Builds a multiset, merging entries whose points coincide in `space`.
MultiSet make_multiset(const PhaseSpace& space, std::vector<MultiSet::Entry> entries);

/// Multiset sum: multiplicity functions add.
MultiSet multiset_sum(const PhaseSpace& space, const MultiSet& a, const MultiSet& b);

/// True if the multisets have identical multiplicity functions up to
/// representation tolerance.
bool multiset_equal(const PhaseSpace& space, const MultiSet& a, const MultiSet& b);

}  // namespace ics
