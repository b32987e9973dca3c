#include "fracdecomp/generators.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <string>

#include "fracdecomp/errors.hpp"
#include "fracdecomp/triangle.hpp"

namespace fracdecomp {

Graph cycle_graph(int length)
{
    if (length < 3)
        throw InputError("a cycle needs at least 3 vertices");
    Graph g(length);
    for (int v = 0; v < length; ++v)
        g.add_edge(v, (v + 1) % length);
    return g;
}

Graph path_graph(int order)
{
    Graph g(order);
    for (int v = 0; v + 1 < order; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph complete_graph(int order)
{
    Graph g(order);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            g.add_edge(u, v);
    return g;
}

std::vector<std::vector<int>> multipartite_parts(const std::vector<int>& sizes)
{
    std::vector<std::vector<int>> parts;
    int next = 0;
    for (int s : sizes)
    {
        if (s <= 0)
            throw InputError("part sizes must be positive");
        std::vector<int> part(s);
        for (int& v : part)
            v = next++;
        parts.push_back(std::move(part));
    }
    return parts;
}

Graph complete_multipartite(const std::vector<int>& sizes)
{
    auto parts = multipartite_parts(sizes);
    int n = 0;
    for (int s : sizes)
        n += s;
    Graph g(n);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int u : parts[i])
                for (int v : parts[j])
                    g.add_edge(u, v);
    return g;
}

Graph random_graph_min_degree(int n, const Rational& min_fraction, std::uint64_t seed, double p)
{
    if (n < 2)
        throw InputError("random graph needs at least 2 vertices");
    Rational target_q = min_fraction * n;
    Integer target_z = numerator_of(target_q) / denominator_of(target_q);
    if (Rational(target_z) < target_q)
        target_z += 1;
    const int target = target_z.convert_to<int>();
    if (target > n - 1)
        throw InputError("min degree " + std::to_string(target) + " is impossible on " + std::to_string(n) +
                         " vertices");
    if (p < 0)
        p = (1.0 + static_cast<double>(target) / (n - 1)) / 2.0;

    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);

    for (int u = 0; u < n; ++u)
    {
        if (g.degree(u) >= target)
            continue;
        std::vector<int> candidates;
        for (int v = 0; v < n; ++v)
            if (v != u && !g.has_edge(u, v))
                candidates.push_back(v);
        std::shuffle(candidates.begin(), candidates.end(), rng);
        for (int v : candidates)
        {
            if (g.degree(u) >= target)
                break;
            g.add_edge(u, v);
        }
    }
    return g;
}

namespace {

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;)
    {
        auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

int parse_count(const std::string& s, std::string_view whole)
{
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        s.size() > 6)
        throw InputError("cannot parse template name '" + std::string(whole) + "'");
    return std::stoi(s);
}

}  // namespace

Template named_template(std::string_view name)
{
    if (name.size() < 2)
        throw InputError("cannot parse template name '" + std::string(name) + "'");
    const char kind = name[0];
    std::string_view rest = name.substr(1);
    std::string label(name);

    if (kind == 'C')
        return {label, WeightedGraph::from_graph(cycle_graph(parse_count(std::string(rest), name)))};
    if (kind == 'P')
        return {label, WeightedGraph::from_graph(path_graph(parse_count(std::string(rest), name)))};
    if (kind == 'T')
    {
        auto fields = split(rest, ',');
        if (fields.size() != 3)
            throw InputError("weighted triangle needs three weights: '" + label + "'");
        std::vector<Rational> e;
        for (const auto& f : fields)
            e.push_back(parse_rational(f));
        std::sort(e.begin(), e.end(), std::greater<>());
        return {label, TriangleTemplate(e[0], e[1], e[2]).graph()};
    }
    if (kind == 'K')
    {
        std::vector<int> sizes;
        if (rest.find(',') != std::string_view::npos)
        {
            for (const auto& f : split(rest, ','))
                sizes.push_back(parse_count(f, name));
        }
        else if (rest.size() == 1)
        {
            return {label, WeightedGraph::from_graph(complete_graph(parse_count(std::string(rest), name)))};
        }
        else
        {
            for (char c : rest)
                sizes.push_back(parse_count(std::string(1, c), name));
        }
        return {label, WeightedGraph::from_graph(complete_multipartite(sizes))};
    }
    throw InputError("unknown template name '" + label + "'");
}

}  // namespace fracdecomp
