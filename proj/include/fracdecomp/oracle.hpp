#ifndef FRACDECOMP_ORACLE_HPP
#define FRACDECOMP_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fracdecomp/core.hpp"

// Ground truth for small hosts: fractional W-decomposability decided by exact
// linear programming over every embedding of W.

namespace fracdecomp {

inline constexpr int default_oracle_max_vertices = 12;

/**
 * Edge-valid injections V(W) -> V(host), in lexicographic order of the image
 * sequence, keeping only the first of any group that places the same
 * weights on the same host edges (i.e. one per automorphism class of W).
 */
std::vector<std::vector<int>> enumerate_embeddings(const WeightedGraph& w, const Graph& host,
                                                   int max_vertices = default_oracle_max_vertices);

struct OracleResult
{
    bool feasible = false;
    std::size_t embeddings = 0;
    /// Set when feasible; verifies as exact.
    std::optional<FractionalDecomposition> witness;
    /// Set when infeasible: potentials z on host edges (ascending edge
    /// order) with sum_e z_e * pattern_e >= 0 for every embedding and
    /// sum_e z_e * w_host(e) < 0.
    std::vector<std::pair<Edge, Rational>> potentials;
};

/**
 * Decides whether `host` has a fractional W-decomposition: Phase-I simplex
 * on  sum_phi  w_W(f) x_phi = w_host(e)  over host edges e, x >= 0.
 */
OracleResult fractional_decomposition_exists(const Template& w, const WeightedGraph& host,
                                             int max_vertices = default_oracle_max_vertices);

}  // namespace fracdecomp

#endif  // FRACDECOMP_ORACLE_HPP
