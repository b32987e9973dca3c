#ifndef FRACDECOMP_CORE_HPP
#define FRACDECOMP_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracdecomp/rational.hpp"

namespace fracdecomp {

/** Unordered vertex pair stored with u < v. */
struct Edge
{
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes the endpoint order. Does not reject loops; callers do.
inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string to_string(const Edge& e);

/**
 * Simple undirected graph on {0, ..., n-1}. Adding a loop, a parallel edge or
 * an out-of-range endpoint throws InputError.
 */
class Graph
{
    public:
        Graph() = default;
        explicit Graph(int order);

        static Graph from_edges(int order, std::span<const Edge> edges);

        void add_edge(int a, int b);

        int order() const { return n_; }
        std::size_t size() const { return m_; }
        bool has_edge(int a, int b) const;
        int degree(int v) const { return static_cast<int>(adj_[v].size()); }
        int min_degree() const;
        /// Sorted ascending.
        const std::vector<int>& neighbours(int v) const { return adj_[v]; }
        /// All edges in ascending (u, v) order.
        std::vector<Edge> edges() const;

        friend bool operator==(const Graph& a, const Graph& b)
        {
            return a.n_ == b.n_ && a.adj_ == b.adj_;
        }

    private:
        int n_ = 0;
        std::size_t m_ = 0;
        std::vector<std::vector<int>> adj_;
        std::vector<std::uint8_t> matrix_;
};

/**
 * Simple graph with strictly positive rational edge weights. An edge that is
 * absent has no weight; a weight of zero is never stored.
 */
class WeightedGraph
{
    public:
        WeightedGraph() = default;
        explicit WeightedGraph(int order);

        /// Every edge of `g` with weight 1.
        static WeightedGraph from_graph(const Graph& g);

        /// Requires w > 0.
        void set_weight(int a, int b, const Rational& w);
        /// Adds `delta` to the current weight (0 if absent). A resulting zero
        /// drops the edge; a negative result throws.
        void add_weight(int a, int b, const Rational& delta);

        int order() const { return n_; }
        std::size_t size() const { return weights_.size(); }
        std::optional<Rational> weight(int a, int b) const;
        bool has_edge(int a, int b) const { return weights_.count(make_edge(a, b)) != 0; }
        const std::map<Edge, Rational>& weights() const { return weights_; }
        Graph underlying() const;
        /// True when every weight is 1, i.e. this is a plain graph.
        bool is_unit() const;

        friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

    private:
        void check_pair(int a, int b) const;

        int n_ = 0;
        std::map<Edge, Rational> weights_;
};

/** A named weighted graph used as the pattern of scaled copies. */
struct Template
{
    std::string name;
    WeightedGraph graph;
};

/**
 * The image of `pattern` under `embedding` (pattern vertex i goes to host
 * vertex embedding[i]) with every weight multiplied by `alpha`.
 */
struct ScaledCopy
{
    std::shared_ptr<const Template> pattern;
    std::vector<int> embedding;
    Rational alpha;
};

struct FractionalDecomposition
{
    WeightedGraph host;
    std::vector<ScaledCopy> copies;
    WeightedGraph leftover;
};

enum class CoverStatus
{
    exact,      ///< every host edge is covered exactly
    leftover,   ///< a valid packing with positive leftover
    violation,  ///< some host edge is oversubscribed
    invalid     ///< a copy is malformed or leaves the host
};

std::string to_string(CoverStatus status);

struct EdgeExcess
{
    Edge edge;
    Rational excess;
};

struct CoverReport
{
    CoverStatus status = CoverStatus::exact;
    WeightedGraph leftover;
    /// Every oversubscribed edge, ascending. The first is the reported one.
    std::vector<EdgeExcess> violations;
    /// Set when status is invalid.
    std::string problem;
};

Rational total_weight(const WeightedGraph& w);

/// gcd of all vertex degrees; 0 for an edgeless graph.
std::int64_t degree_gcd(const Graph& g);

/// |E(F)| divides |E(G)| and gcd(F) divides gcd(G). Throws on edgeless F.
bool is_divisible(const Graph& g, const Graph& f);

/**
 * Returns alpha when some isomorphism f of the underlying graphs satisfies
 * w1(e) = alpha * w2(f(e)) on every edge. Brute-force backtracking; intended
 * for patterns of at most ~10 vertices.
 */
std::optional<Rational> is_scaled_copy(const WeightedGraph& w1, const WeightedGraph& w2);

/// The weighted graph a copy places on the host (host vertex numbering).
WeightedGraph realize(const ScaledCopy& copy, int host_order);

/**
 * Sums every copy's weight per host edge exactly and compares against the
 * host weights.
 */
CoverReport verify_fractional_decomposition(const WeightedGraph& host,
                                            std::span<const ScaledCopy> copies);

/// Wraps verify_fractional_decomposition; throws DecompositionFailure on a
/// violation or an invalid copy.
FractionalDecomposition make_decomposition(WeightedGraph host, std::vector<ScaledCopy> copies);

}  // namespace fracdecomp

#endif  // FRACDECOMP_CORE_HPP
