#include "fracdecomp/pipeline.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <thread>

#include "fracdecomp/errors.hpp"

namespace fracdecomp {

Rational delta_threshold(const TriangleTemplate& e)
{
    const Rational& e1 = e.e1();
    const Rational& e2 = e.e2();
    const Rational& e3 = e.e3();
    // Both denominators are positive because e1 >= e2 >= e3 > 0.
    Rational first = e3 / (2 * e1 + 2 * e2 - 2 * e3);
    Rational second = (e2 + e3) / (8 * e1 - 2 * e2 - 2 * e3);
    return Rational(1, 2) + (first > second ? first : second);
}

TriangleCountTable triangle_counts(const Graph& g)
{
    std::map<Edge, int> counts;
    for (const Edge& e : g.edges())
    {
        const auto& a = g.neighbours(e.u);
        const auto& b = g.neighbours(e.v);
        int common = 0;
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end())
        {
            if (*i < *j)
                ++i;
            else if (*j < *i)
                ++j;
            else
            {
                ++common;
                ++i;
                ++j;
            }
        }
        counts.emplace_hint(counts.end(), e, common);
    }
    return TriangleCountTable(std::move(counts));
}

std::vector<std::array<int, 3>> list_triangles(const Graph& g)
{
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < g.order(); ++a)
        for (int b : g.neighbours(a))
        {
            if (b <= a)
                continue;
            for (int c : g.neighbours(b))
                if (c > b && g.has_edge(a, c))
                    out.push_back({a, b, c});
        }
    return out;
}

GammaBound::GammaBound(Rational gamma) : gamma_(std::move(gamma))
{
    if (!(gamma_ > 0 && gamma_ < Rational(1, 2)))
        throw InputError("gamma must lie strictly between 0 and 1/2, got " + format_rational(gamma_));
}

GammaBound GammaBound::from_template(const TriangleTemplate& e)
{
    return GammaBound(1 - delta_threshold(e));
}

std::string TrianglePipelineResult::summary() const
{
    return "triangles=" + std::to_string(triangles) + " copies=" + std::to_string(decomposition.copies.size()) +
           " status=" + (decomposition.leftover.size() == 0 ? "exact" : "leftover");
}

namespace {

struct ChunkOutput
{
    std::vector<ScaledCopy> copies;
    std::optional<std::size_t> failed_at;
    std::string failure;
};

std::string triangle_name(const std::array<int, 3>& t)
{
    return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
}

void decompose_range(const std::vector<std::array<int, 3>>& triangles, std::size_t begin, std::size_t end,
                     const TriangleCountTable& counts, const TriangleTemplate& e,
                     const std::shared_ptr<const Template>& pattern, ChunkOutput& out)
{
    // Many triangles share the same slot-ordered t triple.
    std::map<std::array<int, 3>, SlotDecomposition> cache;
    const auto& perms = permutations3();

    for (std::size_t i = begin; i < end; ++i)
    {
        const auto& tri = triangles[i];
        std::array<int, 3> t = {counts.at(tri[0], tri[1]), counts.at(tri[0], tri[2]), counts.at(tri[1], tri[2])};
        auto it = cache.find(t);
        if (it == cache.end())
        {
            Vector3q w(Rational(1, t[0]), Rational(1, t[1]), Rational(1, t[2]));
            Vector3q sorted = w;
            std::sort(sorted.data(), sorted.data() + 3, std::greater<>());
            if (!eq2_feasible(sorted, e))
            {
                out.failed_at = i;
                out.failure = "triangle " + triangle_name(tri) + " with weights (" + format_rational(sorted(0)) +
                              ", " + format_rational(sorted(1)) + ", " + format_rational(sorted(2)) +
                              ") has no fractional " + e.name() + "-decomposition";
                return;
            }
            it = cache.emplace(t, decompose_any_order(w, e)).first;
        }
        const TriangleDecomposition& d = it->second.decomposition;
        for (int k = 0; k < 6; ++k)
        {
            if (d.coefficients[k] == 0)
                continue;
            auto phi = triangle_embedding(perms[k], tri);
            out.copies.push_back({pattern, std::vector<int>(phi.begin(), phi.end()), d.coefficients[k]});
        }
    }
}

}  // namespace

TrianglePipelineResult fractional_triangle_decomposition(const Graph& g, const TriangleTemplate& e, int jobs)
{
    TriangleCountTable counts = triangle_counts(g);
    for (const auto& [edge, t] : counts.counts())
        if (t == 0)
            throw DecompositionFailure("uncovered edge " + to_string(edge) + ": it lies in no triangle");

    auto triangles = list_triangles(g);
    auto pattern = std::make_shared<const Template>(Template{e.name(), e.graph()});

    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(triangles.size() / 64) + 1));
    std::vector<ChunkOutput> chunks(jobs);
    std::vector<std::thread> workers;
    const std::size_t per = (triangles.size() + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j)
    {
        std::size_t begin = std::min(triangles.size(), j * per);
        std::size_t end = std::min(triangles.size(), begin + per);
        if (j + 1 == jobs)
            decompose_range(triangles, begin, end, counts, e, pattern, chunks[j]);
        else
            workers.emplace_back(decompose_range, std::cref(triangles), begin, end, std::cref(counts), std::cref(e),
                                 std::cref(pattern), std::ref(chunks[j]));
    }
    for (auto& w : workers)
        w.join();

    std::vector<ScaledCopy> copies;
    for (auto& c : chunks)
    {
        // Chunks are ordered, so the first failing chunk holds the first failure.
        if (c.failed_at)
            throw DecompositionFailure(c.failure);
        copies.insert(copies.end(), std::make_move_iterator(c.copies.begin()),
                      std::make_move_iterator(c.copies.end()));
    }

    TrianglePipelineResult result;
    result.triangles = triangles.size();
    result.decomposition = make_decomposition(WeightedGraph::from_graph(g), std::move(copies));
    if (result.decomposition.leftover.size() != 0)
        throw InternalError("triangle weighting left uncovered weight");
    return result;
}

RatioDiagnostics diagnose_t_ratios(const Graph& g, const GammaBound& gamma)
{
    const Rational& y = gamma.value();
    const int n = g.order();
    if (Rational(g.min_degree()) < (1 - y) * n)
        throw InputError("min degree " + std::to_string(g.min_degree()) + " is below (1 - gamma) n = " +
                         format_rational((1 - y) * n));

    const Rational lower = (1 - 2 * y) / (1 - y);
    const Rational upper = (1 - y) / (1 - 2 * y);
    const Rational coeff_i = (1 - 2 * y) / (2 - 2 * y);
    const Rational coeff_ii = (1 - y) / (2 - 4 * y);

    TriangleCountTable counts = triangle_counts(g);
    RatioDiagnostics report;

    for (int x = 0; x < n; ++x)
    {
        const auto& nb = g.neighbours(x);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
            {
                ++report.adjacent_pairs_checked;
                int te = counts.at(x, nb[i]);
                int tf = counts.at(x, nb[j]);
                if (te == 0 || tf == 0)
                {
                    report.violations.push_back("edges " + to_string(make_edge(x, nb[i])) + " and " +
                                                to_string(make_edge(x, nb[j])) + ": zero triangle count");
                    continue;
                }
                Rational ratio(te, tf);
                if (ratio < lower || ratio > upper)
                    report.violations.push_back("edges " + to_string(make_edge(x, nb[i])) + " and " +
                                                to_string(make_edge(x, nb[j])) + ": t ratio " +
                                                format_rational(ratio) + " outside [" + format_rational(lower) +
                                                ", " + format_rational(upper) + "]");
            }
    }

    for (const auto& tri : list_triangles(g))
    {
        ++report.triangles_checked;
        std::array<int, 3> t = {counts.at(tri[0], tri[1]), counts.at(tri[0], tri[2]), counts.at(tri[1], tri[2])};
        std::sort(t.begin(), t.end());
        if (t[0] == 0)
            continue;  // already reported above
        Rational r1(1, t[0]), r2(1, t[1]), r3(1, t[2]);
        if (r3 < coeff_i * (r1 + r2))
            report.violations.push_back("triangle " + triangle_name(tri) + ": 1/t_max below the lower bound");
        if (r1 > coeff_ii * (r2 + r3))
            report.violations.push_back("triangle " + triangle_name(tri) + ": 1/t_min above the upper bound");
    }
    return report;
}

}  // namespace fracdecomp
