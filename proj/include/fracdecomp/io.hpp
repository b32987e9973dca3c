#ifndef FRACDECOMP_IO_HPP
#define FRACDECOMP_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "fracdecomp/condense.hpp"
#include "fracdecomp/core.hpp"
#include "fracdecomp/extremal.hpp"

// Text formats.
//
// Graph:      "n m", then m lines "u v" (plain) or "u v p/q" (weighted).
//             Blank lines and lines starting with '#' are ignored.
// Partition:  one line per part, space-separated vertex indices.
// Decomposition certificate:
//             fractional-decomposition
//             template <name> <k> <m>       then m lines "u v p/q"
//             copies <c>                    then c lines
//             <name> <v_0> ... <v_{k-1}> <p/q>
// Nonexistence certificate:
//             nonexistence-certificate
//             direction internal-heavy|crossing-light
//             rho <p/q>
//             template <name> <k> <m>       then m lines "u v p/q"
//             host-vertices <n>
//             parts <count>                 then one line per part
//             g0-edges <count>
//             g1-edges <count>
// Infeasibility certificate (edge potentials z):
//             infeasibility-certificate
//             template <name> <k> <m>       then m lines "u v p/q"
//             potentials <m>                then m lines "u v p/q"

namespace fracdecomp {

WeightedGraph read_weighted_graph(std::istream& in);
/// Throws InputError if any weight differs from 1.
Graph read_graph(std::istream& in);
/// Plain lines when every weight is 1, weighted lines otherwise.
void write_graph(std::ostream& out, const WeightedGraph& g);
void write_graph(std::ostream& out, const Graph& g);

IndexedPartition read_partition(std::istream& in);
void write_partition(std::ostream& out, const IndexedPartition& p);

void write_decomposition_certificate(std::ostream& out, const std::vector<ScaledCopy>& copies);
std::vector<ScaledCopy> read_decomposition_certificate(std::istream& in);

struct NonexistenceRecord
{
    Template pattern;
    CertificateDirection direction = CertificateDirection::internal_heavy;
    Rational rho;
    int host_vertices = 0;
    IndexedPartition parts;
    std::size_t g0_edges = 0;
    std::size_t g1_edges = 0;
};

void write_nonexistence_certificate(std::ostream& out, const EdgeBipartitionCertificate& cert, const Template& w);
NonexistenceRecord read_nonexistence_certificate(std::istream& in);

struct PotentialRecord
{
    Template pattern;
    std::vector<std::pair<Edge, Rational>> potentials;
};

void write_infeasibility_certificate(std::ostream& out, const Template& w,
                                     const std::vector<std::pair<Edge, Rational>>& potentials);
PotentialRecord read_infeasibility_certificate(std::istream& in);

/// First non-comment token of the stream, without consuming the stream.
std::string peek_certificate_kind(std::istream& in);

}  // namespace fracdecomp

#endif  // FRACDECOMP_IO_HPP
