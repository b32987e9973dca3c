#ifndef FRACDECOMP_GENERATORS_HPP
#define FRACDECOMP_GENERATORS_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "fracdecomp/core.hpp"

namespace fracdecomp {

/// 0-1-...-(l-1)-0.
Graph cycle_graph(int length);
Graph path_graph(int order);
Graph complete_graph(int order);
/// Parts are consecutive vertex ranges of the given sizes.
Graph complete_multipartite(const std::vector<int>& sizes);
/// The parts of complete_multipartite(sizes).
std::vector<std::vector<int>> multipartite_parts(const std::vector<int>& sizes);

/**
 * G(n, p) followed by a repair pass that joins each vertex of degree below
 * ceil(min_fraction * n) to random non-neighbours until it reaches it.
 * Deterministic in `seed`.
 */
Graph random_graph_min_degree(int n, const Rational& min_fraction, std::uint64_t seed, double p = -1.0);

/**
 * Named shortcuts:
 *   C<l>            cycle
 *   P<n>            path on n vertices
 *   K<n>            complete graph, n a single digit
 *   K<a>,<b>,...    complete multipartite
 *   K<d1><d2>...    complete multipartite with single-digit parts (K33, K211)
 *   T<e1>,<e2>,<e3> weighted triangle, rational weights
 * Throws InputError for anything else.
 */
Template named_template(std::string_view name);

}  // namespace fracdecomp

#endif  // FRACDECOMP_GENERATORS_HPP
