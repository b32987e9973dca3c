#include "fracdecomp/core.hpp"

#include <algorithm>
#include <numeric>

#include "fracdecomp/errors.hpp"

namespace fracdecomp {

std::string to_string(const Edge& e)
{
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

std::string to_string(CoverStatus status)
{
    switch (status)
    {
        case CoverStatus::exact: return "exact";
        case CoverStatus::leftover: return "leftover";
        case CoverStatus::violation: return "violation";
        case CoverStatus::invalid: return "invalid";
    }
    return "unknown";
}

// ---------------------------------------------------------------- Graph

Graph::Graph(int order) : n_(order)
{
    if (order < 0)
        throw InputError("negative vertex count");
    adj_.resize(order);
    matrix_.assign(static_cast<std::size_t>(order) * order, 0);
}

Graph Graph::from_edges(int order, std::span<const Edge> edges)
{
    Graph g(order);
    for (const Edge& e : edges)
        g.add_edge(e.u, e.v);
    return g;
}

void Graph::add_edge(int a, int b)
{
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        throw InputError("edge " + to_string(make_edge(a, b)) + " has an endpoint outside 0.." + std::to_string(n_ - 1));
    if (a == b)
        throw InputError("loop at vertex " + std::to_string(a));
    if (has_edge(a, b))
        throw InputError("parallel edge " + to_string(make_edge(a, b)));
    matrix_[static_cast<std::size_t>(a) * n_ + b] = 1;
    matrix_[static_cast<std::size_t>(b) * n_ + a] = 1;
    adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a), a);
    ++m_;
}

bool Graph::has_edge(int a, int b) const
{
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        return false;
    return matrix_[static_cast<std::size_t>(a) * n_ + b] != 0;
}

int Graph::min_degree() const
{
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v)
        d = std::min(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.push_back({u, v});
    return out;
}

// -------------------------------------------------------- WeightedGraph

WeightedGraph::WeightedGraph(int order) : n_(order)
{
    if (order < 0)
        throw InputError("negative vertex count");
}

WeightedGraph WeightedGraph::from_graph(const Graph& g)
{
    WeightedGraph w(g.order());
    for (const Edge& e : g.edges())
        w.weights_.emplace(e, Rational(1));
    return w;
}

void WeightedGraph::check_pair(int a, int b) const
{
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        throw InputError("edge " + to_string(make_edge(a, b)) + " has an endpoint outside 0.." + std::to_string(n_ - 1));
    if (a == b)
        throw InputError("loop at vertex " + std::to_string(a));
}

void WeightedGraph::set_weight(int a, int b, const Rational& w)
{
    check_pair(a, b);
    if (w <= 0)
        throw InputError("non-positive weight " + format_rational(w) + " on edge " + to_string(make_edge(a, b)));
    weights_[make_edge(a, b)] = w;
}

void WeightedGraph::add_weight(int a, int b, const Rational& delta)
{
    check_pair(a, b);
    Edge e = make_edge(a, b);
    auto it = weights_.find(e);
    Rational next = (it == weights_.end() ? Rational(0) : it->second) + delta;
    if (next < 0)
        throw InputError("weight of edge " + to_string(e) + " would become negative");
    if (next == 0)
    {
        if (it != weights_.end())
            weights_.erase(it);
        return;
    }
    weights_[e] = next;
}

std::optional<Rational> WeightedGraph::weight(int a, int b) const
{
    auto it = weights_.find(make_edge(a, b));
    if (it == weights_.end())
        return std::nullopt;
    return it->second;
}

Graph WeightedGraph::underlying() const
{
    Graph g(n_);
    for (const auto& [e, w] : weights_)
        g.add_edge(e.u, e.v);
    return g;
}

bool WeightedGraph::is_unit() const
{
    return std::all_of(weights_.begin(), weights_.end(), [](const auto& kv) { return kv.second == 1; });
}

// ----------------------------------------------------------- operations

Rational total_weight(const WeightedGraph& w)
{
    Rational sum = 0;
    for (const auto& [e, x] : w.weights())
        sum += x;
    return sum;
}

std::int64_t degree_gcd(const Graph& g)
{
    std::int64_t d = 0;
    for (int v = 0; v < g.order(); ++v)
        d = std::gcd(d, static_cast<std::int64_t>(g.degree(v)));
    return d;
}

bool is_divisible(const Graph& g, const Graph& f)
{
    if (f.size() == 0)
        throw InputError("divisibility is undefined for an edgeless pattern");
    if (g.size() % f.size() != 0)
        return false;
    // gcd(F) > 0 because F has an edge; gcd(G) = 0 is divisible by anything.
    return degree_gcd(g) % degree_gcd(f) == 0;
}

namespace {

std::optional<Rational> triangle_ratio(const WeightedGraph& w1, const WeightedGraph& w2)
{
    auto sorted = [](const WeightedGraph& w) {
        std::vector<Rational> v;
        for (const auto& [e, x] : w.weights())
            v.push_back(x);
        std::sort(v.begin(), v.end(), std::greater<>());
        return v;
    };
    auto a = sorted(w1);
    auto b = sorted(w2);
    Rational alpha = a[0] / b[0];
    if (a[1] != alpha * b[1] || a[2] != alpha * b[2])
        return std::nullopt;
    return alpha;
}

class IsomorphismSearch
{
    public:
        IsomorphismSearch(const WeightedGraph& w1, const WeightedGraph& w2)
            : w1_(w1), w2_(w2), g1_(w1.underlying()), g2_(w2.underlying()),
              image_(w1.order(), -1), used_(w2.order(), false)
        {
        }

        std::optional<Rational> run()
        {
            if (extend(0))
                return alpha_;
            return std::nullopt;
        }

    private:
        bool extend(int v)
        {
            if (v == w1_.order())
                return true;
            for (int c = 0; c < w2_.order(); ++c)
            {
                if (used_[c] || g1_.degree(v) != g2_.degree(c))
                    continue;
                std::optional<Rational> saved = alpha_;
                if (consistent(v, c))
                {
                    image_[v] = c;
                    used_[c] = true;
                    if (extend(v + 1))
                        return true;
                    used_[c] = false;
                    image_[v] = -1;
                }
                alpha_ = saved;
            }
            return false;
        }

        // Checks v -> c against every earlier assignment; may fix alpha.
        bool consistent(int v, int c)
        {
            for (int u = 0; u < v; ++u)
            {
                bool e1 = g1_.has_edge(u, v);
                if (e1 != g2_.has_edge(image_[u], c))
                    return false;
                if (!e1)
                    continue;
                Rational ratio = *w1_.weight(u, v) / *w2_.weight(image_[u], c);
                if (!alpha_)
                    alpha_ = ratio;
                else if (*alpha_ != ratio)
                    return false;
            }
            return true;
        }

        const WeightedGraph& w1_;
        const WeightedGraph& w2_;
        Graph g1_;
        Graph g2_;
        std::vector<int> image_;
        std::vector<bool> used_;
        std::optional<Rational> alpha_;
};

}  // namespace

std::optional<Rational> is_scaled_copy(const WeightedGraph& w1, const WeightedGraph& w2)
{
    if (w1.order() != w2.order() || w1.size() != w2.size())
        return std::nullopt;
    if (w1.size() == 0)
        return Rational(1);
    if (w1.order() == 3 && w1.size() == 3)
        return triangle_ratio(w1, w2);
    return IsomorphismSearch(w1, w2).run();
}

WeightedGraph realize(const ScaledCopy& copy, int host_order)
{
    WeightedGraph out(host_order);
    for (const auto& [e, w] : copy.pattern->graph.weights())
        out.set_weight(copy.embedding[e.u], copy.embedding[e.v], copy.alpha * w);
    return out;
}

namespace {

std::string check_copy(const ScaledCopy& copy, const WeightedGraph& host, std::size_t index)
{
    std::string where = "copy " + std::to_string(index) + ": ";
    if (!copy.pattern)
        return where + "missing template";
    const WeightedGraph& p = copy.pattern->graph;
    if (static_cast<int>(copy.embedding.size()) != p.order())
        return where + "embedding has " + std::to_string(copy.embedding.size()) + " vertices, template has " +
               std::to_string(p.order());
    if (copy.alpha <= 0)
        return where + "non-positive scale factor " + format_rational(copy.alpha);
    std::vector<bool> seen(host.order(), false);
    for (int x : copy.embedding)
    {
        if (x < 0 || x >= host.order())
            return where + "vertex " + std::to_string(x) + " is not a host vertex";
        if (seen[x])
            return where + "embedding is not injective (vertex " + std::to_string(x) + " repeated)";
        seen[x] = true;
    }
    for (const auto& [e, w] : p.weights())
        if (!host.has_edge(copy.embedding[e.u], copy.embedding[e.v]))
            return where + "edge " + to_string(make_edge(copy.embedding[e.u], copy.embedding[e.v])) +
                   " is not a host edge";
    return {};
}

}  // namespace

CoverReport verify_fractional_decomposition(const WeightedGraph& host, std::span<const ScaledCopy> copies)
{
    CoverReport report;
    report.leftover = WeightedGraph(host.order());

    std::map<Edge, Rational> load;
    for (std::size_t i = 0; i < copies.size(); ++i)
    {
        const ScaledCopy& c = copies[i];
        if (std::string problem = check_copy(c, host, i); !problem.empty())
        {
            report.status = CoverStatus::invalid;
            report.problem = problem;
            return report;
        }
        for (const auto& [e, w] : c.pattern->graph.weights())
            load[make_edge(c.embedding[e.u], c.embedding[e.v])] += c.alpha * w;
    }

    for (const auto& [e, w] : host.weights())
    {
        auto it = load.find(e);
        Rational rest = it == load.end() ? w : w - it->second;
        if (rest < 0)
            report.violations.push_back({e, -rest});
        else if (rest > 0)
            report.leftover.set_weight(e.u, e.v, rest);
    }

    if (!report.violations.empty())
        report.status = CoverStatus::violation;
    else if (report.leftover.size() != 0)
        report.status = CoverStatus::leftover;
    return report;
}

FractionalDecomposition make_decomposition(WeightedGraph host, std::vector<ScaledCopy> copies)
{
    CoverReport report = verify_fractional_decomposition(host, copies);
    if (report.status == CoverStatus::invalid)
        throw DecompositionFailure(report.problem);
    if (report.status == CoverStatus::violation)
    {
        const EdgeExcess& first = report.violations.front();
        throw DecompositionFailure("edge " + to_string(first.edge) + " oversubscribed by " +
                                   format_rational(first.excess));
    }
    return {std::move(host), std::move(copies), std::move(report.leftover)};
}

}  // namespace fracdecomp
