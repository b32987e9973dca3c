#include "fracdecomp/blowup.hpp"

#include "fracdecomp/errors.hpp"

namespace fracdecomp {

namespace {

Integer falling(int top, int count)
{
    Integer r = 1;
    for (int k = 0; k < count; ++k)
        r *= top - k;
    return r;
}

void require_q(const Graph& f, const IndexedPartition& p, int q)
{
    validate_partition(f, p);
    if (q < 1 || q < p.max_part_size())
        throw InputError("q = " + std::to_string(q) + " is below the largest part size " +
                         std::to_string(p.max_part_size()));
}

}  // namespace

WeightedGraph blow_up(const WeightedGraph& w, int q)
{
    if (q < 1)
        throw InputError("blow-up factor must be positive, got " + std::to_string(q));
    WeightedGraph out(w.order() * q);
    for (const auto& [e, x] : w.weights())
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                out.set_weight(blowup_vertex(e.u, i, q), blowup_vertex(e.v, j, q), x);
    return out;
}

Integer count_injections(const Graph& f, const IndexedPartition& p, int q)
{
    require_q(f, p, q);
    Integer total = 1;
    for (const auto& part : p.parts)
        total *= falling(q, static_cast<int>(part.size()));
    return total;
}

void for_each_injection(const Graph& f, const IndexedPartition& p, int q,
                        const std::function<void(const std::vector<int>&)>& visit)
{
    require_q(f, p, q);
    const std::vector<int> owner = p.membership(f.order());
    std::vector<int> image(f.order(), -1);
    std::vector<std::vector<bool>> used(p.part_count(), std::vector<bool>(q, false));

    std::function<void(int)> extend = [&](int x) {
        if (x == f.order())
        {
            visit(image);
            return;
        }
        const int part = owner[x];
        for (int j = 0; j < q; ++j)
        {
            if (used[part][j])
                continue;
            used[part][j] = true;
            image[x] = blowup_vertex(part, j, q);
            extend(x + 1);
            used[part][j] = false;
        }
    };
    extend(0);
}

FractionalDecomposition blowup_decomposition(const Graph& f, const IndexedPartition& p, int q,
                                             std::uint64_t max_copies)
{
    Integer total = count_injections(f, p, q);
    if (total > max_copies)
        throw InputError("|A| = " + total.str() + " exceeds the copy limit " + std::to_string(max_copies));

    WeightedGraph host = blow_up(condense(f, p), q);
    auto pattern = std::make_shared<const Template>(Template{"F", WeightedGraph::from_graph(f)});
    const Rational alpha(Integer(q) * q, total);

    std::vector<ScaledCopy> copies;
    copies.reserve(total.convert_to<std::size_t>());
    for_each_injection(f, p, q, [&](const std::vector<int>& a) { copies.push_back({pattern, a, alpha}); });
    return make_decomposition(std::move(host), std::move(copies));
}

std::map<Edge, Integer> injection_edge_counts(const Graph& f, const IndexedPartition& p, int q)
{
    std::map<Edge, Integer> counts;
    const auto edges = f.edges();
    for_each_injection(f, p, q, [&](const std::vector<int>& a) {
        // a is injective, so distinct f-edges give distinct images.
        for (const Edge& e : edges)
            counts[make_edge(a[e.u], a[e.v])] += 1;
    });
    return counts;
}

std::map<Edge, Integer> injection_edge_counts_by_formula(const Graph& f, const IndexedPartition& p, int q)
{
    require_q(f, p, q);
    const std::vector<int> owner = p.membership(f.order());
    const int k = p.part_count();
    std::vector<Integer> full(k), pinned(k);
    for (int i = 0; i < k; ++i)
    {
        int s = static_cast<int>(p.parts[i].size());
        full[i] = falling(q, s);
        pinned[i] = falling(q - 1, s - 1);
    }

    // Injections sending a given f-edge between U_i and U_j onto a fixed
    // Q-edge between blocks i and j; the same for every one of the q^2
    // positions.
    std::map<Edge, Integer> per_edge;
    for (const Edge& e : f.edges())
    {
        int i = owner[e.u], j = owner[e.v];
        Integer n = pinned[i] * pinned[j];
        for (int r = 0; r < k; ++r)
            if (r != i && r != j)
                n *= full[r];
        per_edge[make_edge(i, j)] += n;
    }

    std::map<Edge, Integer> counts;
    for (const auto& [blocks, n] : per_edge)
        for (int s = 0; s < q; ++s)
            for (int t = 0; t < q; ++t)
                counts[make_edge(blowup_vertex(blocks.u, s, q), blowup_vertex(blocks.v, t, q))] = n;
    return counts;
}

bool verify_blowup_identity(const Graph& f, const IndexedPartition& p, int q)
{
    const Integer total = count_injections(f, p, q);
    const WeightedGraph host = blow_up(condense(f, p), q);
    const auto counts = injection_edge_counts_by_formula(f, p, q);
    if (counts.size() != host.size())
        return false;
    for (const auto& [e, w] : host.weights())
    {
        auto it = counts.find(e);
        if (it == counts.end() || Rational(it->second * q * q) != w * total)
            return false;
    }
    return true;
}

}  // namespace fracdecomp
