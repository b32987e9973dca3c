#ifndef FRACDECOMP_EXTREMAL_HPP
#define FRACDECOMP_EXTREMAL_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "fracdecomp/condense.hpp"
#include "fracdecomp/core.hpp"

// Lower-bound constructions: host graphs with no fractional W-decomposition,
// together with the edge bipartition that proves it.

namespace fracdecomp {

enum class CertificateDirection
{
    /// parts {V1, V2}; G0 = edges inside a part, G1 = edges across.
    /// Every copy of W puts >= rho of its weight on G0; |G0|/|G1| < rho/(1-rho).
    internal_heavy,
    /// parts {V1..V4} independent; G0 = G[V1,V2] + G[V3,V4], G1 = the rest.
    /// Every copy of W puts <= rho of its weight on G0; |G0|/|G1| > rho/(1-rho).
    crossing_light
};

std::string to_string(CertificateDirection d);

struct EdgeBipartitionCertificate
{
    Graph g0;
    Graph g1;
    Rational rho;
    CertificateDirection direction = CertificateDirection::internal_heavy;
    /// Vertex parts of the host that G0 and G1 are read off from.
    IndexedPartition parts;
};

struct ExtremalConstruction
{
    Graph host;
    EdgeBipartitionCertificate certificate;
    int h = 0;
    std::int64_t modulus = 1;  ///< g
};

/// g = gcd(W) |E(W)| when W is a plain graph, else 1.
std::int64_t divisibility_modulus(const WeightedGraph& w);

/**
 * min over bipartitions {U1, U2} of (||W[U1]|| + ||W[U2]||) / ||W||.
 * Exhaustive; |V(W)| <= 24.
 */
Rational rho_bipartite_min(const WeightedGraph& w);

/**
 * max over partitions of V(W) into four independent sets (empty parts
 * allowed) and over the three pairings of the parts of
 * (||W[U1,U2]|| + ||W[U3,U4]||) / ||W||. nullopt when W is not
 * 4-colourable. Exhaustive; |V(W)| <= 16.
 */
std::optional<Rational> rho_fourpart_max(const WeightedGraph& w);

/// 1/2 + rho / (2 - 2 rho), for 0 < rho < 1.
Rational lemma7_bound(const Rational& rho);

struct Lemma8Bound
{
    Real strong;    ///< (3 - sqrt((3 rho - 1)/(1 + rho))) / 4
    Rational weak;  ///< 1/2 + (1 - rho)/(2 + 6 rho)
};

/// Requires 1/3 <= rho < 1.
Lemma8Bound lemma8_bound(const Rational& rho);

/**
 * Two circulant h-regular graphs on halves of size n/2 joined by a complete
 * bipartite graph; h is the largest multiple of 2g below rho n / (2 - 2 rho)
 * with rho = rho_bipartite_min(W). Requires n divisible by 4g.
 */
ExtremalConstruction build_lemma7_graph(const WeightedGraph& w, int n);

/**
 * Complete 4-partite graph with parts h, h, n/2 - h, n/2 - h, where h is the
 * smallest multiple of 2g above gamma n, gamma = (1 + sqrt((3 rho - 1)/(1 + rho)))/4.
 * The comparison h > gamma n is done in integers. Requires n divisible by
 * 4g and h < n/2.
 */
ExtremalConstruction build_lemma8_graph(const WeightedGraph& w, int n);

/// Smallest n accepted by build_lemma8_graph, searching n <= limit.
std::optional<int> smallest_lemma8_order(const WeightedGraph& w, int limit = 1 << 16);

/// Splits E(g) into G0/G1 according to `parts` and `direction`.
EdgeBipartitionCertificate certificate_from_parts(const Graph& g, IndexedPartition parts, Rational rho,
                                                  CertificateDirection direction);

struct CertificateCheck
{
    bool valid = false;
    std::string reason;  ///< first failed check, empty when valid
};

/**
 * Re-checks everything the nonexistence argument relies on: the parts
 * partition V(g); G0 and G1 partition E(g) as the direction prescribes;
 * rho is valid for W (re-derived exhaustively); and the edge-count ratio
 * inequality holds exactly.
 */
CertificateCheck check_certificate(const Graph& g, const EdgeBipartitionCertificate& cert, const WeightedGraph& w);

inline bool verify_certificate(const Graph& g, const EdgeBipartitionCertificate& cert, const WeightedGraph& w)
{
    return check_certificate(g, cert, w).valid;
}

}  // namespace fracdecomp

#endif  // FRACDECOMP_EXTREMAL_HPP
