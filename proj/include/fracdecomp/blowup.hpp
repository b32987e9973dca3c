#ifndef FRACDECOMP_BLOWUP_HPP
#define FRACDECOMP_BLOWUP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "fracdecomp/condense.hpp"
#include "fracdecomp/core.hpp"

namespace fracdecomp {

/// Vertex (x, i) of a q-blow-up, i in 0..q-1, is numbered x * q + i.
inline int blowup_vertex(int x, int i, int q) { return x * q + i; }

/// Every vertex becomes q clones; each edge xy becomes K_{q,q} with weight w(xy).
WeightedGraph blow_up(const WeightedGraph& w, int q);

/// |A| = prod_i q (q-1) ... (q - |U_i| + 1). Requires q >= max part size.
Integer count_injections(const Graph& f, const IndexedPartition& p, int q);

/**
 * Calls `visit` with every partition-respecting injection a : V(f) -> V(Q),
 * as a vector of blow-up vertex ids, in lexicographic order of
 * (a(0), a(1), ...).
 */
void for_each_injection(const Graph& f, const IndexedPartition& p, int q,
                        const std::function<void(const std::vector<int>&)>& visit);

inline constexpr std::uint64_t default_max_copies = 1'000'000;

/**
 * Fractional f-decomposition of the q-blow-up of condense(f, p): one copy
 * of f per partition-respecting injection, each edge weighted q^2 / |A|.
 * Throws InputError when q is below the largest part or |A| exceeds
 * `max_copies`; use verify_blowup_identity for such sizes.
 */
FractionalDecomposition blowup_decomposition(const Graph& f, const IndexedPartition& p, int q,
                                             std::uint64_t max_copies = default_max_copies);

/// |A_e| for every edge e of Q, counted by walking all of A.
std::map<Edge, Integer> injection_edge_counts(const Graph& f, const IndexedPartition& p, int q);

/**
 * |A_e| for every edge e of Q from the closed count: an f-edge xy with
 * x in U_i, y in U_j lands on {(i,s),(j,t)} in
 * (q-1)_{|U_i|-1} (q-1)_{|U_j|-1} prod_{r != i,j} (q)_{|U_r|} injections.
 */
std::map<Edge, Integer> injection_edge_counts_by_formula(const Graph& f, const IndexedPartition& p, int q);

/**
 * Checks |A_e| * q^2 = w_Q(e) * |A| on every edge of Q using the closed
 * counts, without materializing copies.
 */
bool verify_blowup_identity(const Graph& f, const IndexedPartition& p, int q);

}  // namespace fracdecomp

#endif  // FRACDECOMP_BLOWUP_HPP
