#include "fracdecomp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "fracdecomp/errors.hpp"
#include "fracdecomp/linalg.hpp"

namespace fracdecomp {

std::vector<std::vector<int>> enumerate_embeddings(const WeightedGraph& w, const Graph& host, int max_vertices)
{
    if (host.order() > max_vertices)
        throw InputError("host has " + std::to_string(host.order()) + " vertices; the oracle is limited to " +
                         std::to_string(max_vertices));
    const Graph pattern = w.underlying();
    const int k = w.order();

    std::vector<std::vector<int>> out;
    if (k > host.order())
        return out;

    using Footprint = std::vector<std::pair<Edge, Rational>>;
    std::set<Footprint> seen;
    std::vector<int> image(k, -1);
    std::vector<bool> used(host.order(), false);

    std::function<void(int)> extend = [&](int x) {
        if (x == k)
        {
            Footprint fp;
            for (const auto& [e, weight] : w.weights())
                fp.emplace_back(make_edge(image[e.u], image[e.v]), weight);
            std::sort(fp.begin(), fp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            if (seen.insert(std::move(fp)).second)
                out.push_back(image);
            return;
        }
        for (int c = 0; c < host.order(); ++c)
        {
            if (used[c])
                continue;
            bool ok = true;
            for (int y : pattern.neighbours(x))
                if (y < x && !host.has_edge(image[y], c))
                {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            used[c] = true;
            image[x] = c;
            extend(x + 1);
            used[c] = false;
        }
        image[x] = -1;
    };
    extend(0);
    return out;
}

OracleResult fractional_decomposition_exists(const Template& w, const WeightedGraph& host, int max_vertices)
{
    const auto embeddings = enumerate_embeddings(w.graph, host.underlying(), max_vertices);

    std::vector<Edge> rows;
    std::map<Edge, Eigen::Index> row_of;
    for (const auto& [e, x] : host.weights())
    {
        row_of.emplace(e, static_cast<Eigen::Index>(rows.size()));
        rows.push_back(e);
    }

    const auto m = static_cast<Eigen::Index>(rows.size());
    const auto n = static_cast<Eigen::Index>(embeddings.size());
    MatrixXq a = MatrixXq::Zero(m, n);
    VectorXq b(m);
    for (Eigen::Index i = 0; i < m; ++i)
        b(i) = *host.weight(rows[i].u, rows[i].v);
    for (Eigen::Index j = 0; j < n; ++j)
        for (const auto& [f, weight] : w.graph.weights())
            a(row_of.at(make_edge(embeddings[j][f.u], embeddings[j][f.v])), j) = weight;

    const auto lp = phase_one<Rational>(a, b);

    OracleResult result;
    result.embeddings = embeddings.size();
    result.feasible = lp.feasible;
    if (lp.feasible)
    {
        auto pattern = std::make_shared<const Template>(w);
        std::vector<ScaledCopy> copies;
        for (Eigen::Index j = 0; j < n; ++j)
            if (lp.x(j) != 0)
                copies.push_back({pattern, embeddings[j], lp.x(j)});
        result.witness = make_decomposition(host, std::move(copies));
        if (result.witness->leftover.size() != 0)
            throw InternalError("oracle witness leaves uncovered weight");
    }
    else
    {
        for (Eigen::Index i = 0; i < m; ++i)
            result.potentials.emplace_back(rows[i], -lp.farkas(i));
    }
    return result;
}

}  // namespace fracdecomp
