#include "fracdecomp/condense.hpp"

#include <algorithm>

#include "fracdecomp/errors.hpp"

namespace fracdecomp {

int IndexedPartition::max_part_size() const
{
    std::size_t s = 0;
    for (const auto& part : parts)
        s = std::max(s, part.size());
    return static_cast<int>(s);
}

std::vector<int> IndexedPartition::membership(int order) const
{
    std::vector<int> owner(order, -1);
    for (int i = 0; i < part_count(); ++i)
        for (int v : parts[i])
            if (v >= 0 && v < order)
                owner[v] = i;
    return owner;
}

void validate_partition(const Graph& f, const IndexedPartition& p)
{
    std::vector<int> owner(f.order(), -1);
    for (int i = 0; i < p.part_count(); ++i)
    {
        if (p.parts[i].empty())
            throw InputError("part " + std::to_string(i) + " is empty");
        for (int v : p.parts[i])
        {
            if (v < 0 || v >= f.order())
                throw InputError("part " + std::to_string(i) + " names vertex " + std::to_string(v) +
                                 " outside 0.." + std::to_string(f.order() - 1));
            if (owner[v] >= 0)
                throw InputError("vertex " + std::to_string(v) + " lies in parts " + std::to_string(owner[v]) +
                                 " and " + std::to_string(i));
            owner[v] = i;
        }
    }
    for (int v = 0; v < f.order(); ++v)
        if (owner[v] < 0)
            throw InputError("vertex " + std::to_string(v) + " is in no part");
    for (const Edge& e : f.edges())
        if (owner[e.u] == owner[e.v])
            throw InputError("part " + std::to_string(owner[e.u]) + " is not independent: it contains edge " +
                             to_string(e));
}

WeightedGraph condense(const Graph& f, const IndexedPartition& p)
{
    validate_partition(f, p);
    std::vector<int> owner = p.membership(f.order());
    WeightedGraph w(p.part_count());
    for (const Edge& e : f.edges())
        w.add_weight(owner[e.u], owner[e.v], Rational(1));
    return w;
}

IndexedPartition canonical_tripartition_of_cycle(int length)
{
    if (length < 3 || length % 2 == 0)
        throw InputError("cycle length must be odd and at least 3, got " + std::to_string(length));
    IndexedPartition p;
    p.parts.resize(3);
    for (int v = 0; v + 1 < length; ++v)
        p.parts[v % 2].push_back(v);
    p.parts[2].push_back(length - 1);
    return p;
}

}  // namespace fracdecomp
