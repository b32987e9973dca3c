#ifndef FRACDECOMP_PIPELINE_HPP
#define FRACDECOMP_PIPELINE_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fracdecomp/core.hpp"
#include "fracdecomp/triangle.hpp"

namespace fracdecomp {

/// delta(e1,e2,e3) = 1/2 + max{ e3/(2e1+2e2-2e3), (e2+e3)/(8e1-2e2-2e3) }.
Rational delta_threshold(const TriangleTemplate& e);

/** t_xy for every edge xy: the number of common neighbours of x and y. */
class TriangleCountTable
{
    public:
        TriangleCountTable() = default;
        explicit TriangleCountTable(std::map<Edge, int> counts) : counts_(std::move(counts)) {}

        int at(int a, int b) const { return counts_.at(make_edge(a, b)); }
        const std::map<Edge, int>& counts() const { return counts_; }

    private:
        std::map<Edge, int> counts_;
};

TriangleCountTable triangle_counts(const Graph& g);

/// Every triangle {a < b < c} of g, ascending lexicographically.
std::vector<std::array<int, 3>> list_triangles(const Graph& g);

/** gamma with 0 < gamma < 1/2. */
class GammaBound
{
    public:
        explicit GammaBound(Rational gamma);
        /// 1 - delta(e).
        static GammaBound from_template(const TriangleTemplate& e);

        const Rational& value() const { return gamma_; }

    private:
        Rational gamma_;
};

struct TrianglePipelineResult
{
    FractionalDecomposition decomposition;
    std::size_t triangles = 0;

    /// "triangles=<count> copies=<count> status=exact"
    std::string summary() const;
};

/**
 * Weights every triangle K of g by 1/t_e on each edge e and decomposes each
 * weighted triangle into scaled copies of T_e. Copies come out in ascending
 * triangle order regardless of `jobs`.
 *
 * Throws DecompositionFailure naming the first edge in no triangle, or the
 * first triangle whose weights fail eq2_feasible.
 */
TrianglePipelineResult fractional_triangle_decomposition(const Graph& g, const TriangleTemplate& e,
                                                         int jobs = 1);

struct RatioDiagnostics
{
    std::size_t adjacent_pairs_checked = 0;
    std::size_t triangles_checked = 0;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

/**
 * Checks the common-neighbour ratio bounds that hold once min degree is at
 * least (1 - gamma) n:
 *   (1-2g)/(1-g) <= t_e / t_f <= (1-g)/(1-2g) for adjacent edges e, f, and,
 *   for a triangle with t_xy <= t_xz <= t_yz,
 *   1/t_yz >= (1-2g)/(2-2g) (1/t_xy + 1/t_xz) and
 *   1/t_xy <= (1-g)/(2-4g) (1/t_xz + 1/t_yz).
 * Throws InputError when the min-degree precondition fails.
 */
RatioDiagnostics diagnose_t_ratios(const Graph& g, const GammaBound& gamma);

}  // namespace fracdecomp

#endif  // FRACDECOMP_PIPELINE_HPP
