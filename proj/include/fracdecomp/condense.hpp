#ifndef FRACDECOMP_CONDENSE_HPP
#define FRACDECOMP_CONDENSE_HPP

#include <vector>

#include "fracdecomp/core.hpp"

namespace fracdecomp {

/** Ordered list of disjoint vertex sets U_1, ..., U_k. */
struct IndexedPartition
{
    std::vector<std::vector<int>> parts;

    int part_count() const { return static_cast<int>(parts.size()); }
    int max_part_size() const;
    /// part_of[v] for v in 0..order-1.
    std::vector<int> membership(int order) const;
};

/**
 * Throws InputError unless `p` is a partition of V(f) into nonempty
 * independent sets. The message names the offending vertex or edge.
 */
void validate_partition(const Graph& f, const IndexedPartition& p);

/// Weighted graph on {0..k-1}; edge ij weighs the number of f-edges between
/// U_i and U_j. Pairs with no crossing edge are absent.
WeightedGraph condense(const Graph& f, const IndexedPartition& p);

/// Parts (even vertices up to l-3, odd vertices up to l-2, {l-1}) of the
/// cycle 0-1-...-(l-1)-0; condenses to T_{l-2,1,1}. Requires odd l >= 3.
IndexedPartition canonical_tripartition_of_cycle(int length);

}  // namespace fracdecomp

#endif  // FRACDECOMP_CONDENSE_HPP
