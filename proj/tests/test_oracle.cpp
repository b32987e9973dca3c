#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fracdecomp/errors.hpp"
#include "fracdecomp/generators.hpp"
#include "fracdecomp/oracle.hpp"
#include "fracdecomp/triangle.hpp"
#include "support.hpp"

using namespace fracdecomp;
using test::triple;

namespace {

Template named(const std::string& name, const Graph& g) { return {name, WeightedGraph::from_graph(g)}; }

std::map<Edge, Rational> footprint(const WeightedGraph& w, const std::vector<int>& phi)
{
    std::map<Edge, Rational> out;
    for (const auto& [f, x] : w.weights())
        out[make_edge(phi[f.u], phi[f.v])] = x;
    return out;
}

// Checks the potentials against every bijection of the three host vertices.
void check_triangle_farkas(const OracleResult& r, const WeightedGraph& pattern, const WeightedGraph& host)
{
    std::map<Edge, Rational> z(r.potentials.begin(), r.potentials.end());
    Rational on_host = 0;
    for (const auto& [e, w] : host.weights())
        on_host += z[e] * w;
    CHECK(on_host < 0);
    std::vector<int> phi{0, 1, 2};
    do
    {
        Rational on_copy = 0;
        for (const auto& [e, w] : footprint(pattern, phi))
            on_copy += z[e] * w;
        CHECK(on_copy >= 0);
    } while (std::next_permutation(phi.begin(), phi.end()));
}

}  // namespace

TEST_CASE("enumerate_embeddings")
{
    const auto c5 = WeightedGraph::from_graph(cycle_graph(5));
    // 7*6*5*4*3 injections, 10 automorphisms of C5 each.
    CHECK(enumerate_embeddings(c5, complete_graph(7)).size() == 252);
    CHECK(enumerate_embeddings(c5, complete_multipartite({3, 3})).empty());
    CHECK(enumerate_embeddings(WeightedGraph::from_graph(complete_graph(3)), complete_graph(4)).size() == 4);
    // Distinct weights break the symmetry: all 6 bijections differ.
    CHECK(enumerate_embeddings(TriangleTemplate(3, 2, 1).graph(), complete_graph(3)).size() == 6);
    CHECK(enumerate_embeddings(TriangleTemplate(3, 1, 1).graph(), complete_graph(3)).size() == 3);
    CHECK_THROWS_AS(enumerate_embeddings(c5, complete_graph(13)), InputError);

    const auto list = enumerate_embeddings(c5, complete_graph(6));
    std::set<std::map<Edge, Rational>> seen;
    for (const auto& phi : list)
    {
        CHECK(seen.insert(footprint(c5, phi)).second);
        for (const auto& [f, x] : c5.weights())
            CHECK(complete_graph(6).has_edge(phi[f.u], phi[f.v]));
    }
    CHECK(list.size() == 6 * 5 * 4 * 3 * 2 / 10);
}

TEST_CASE("K3 in K4 is feasible at one half per triangle")
{
    const auto r = fractional_decomposition_exists(named("K3", complete_graph(3)),
                                                   WeightedGraph::from_graph(complete_graph(4)));
    REQUIRE(r.feasible);
    REQUIRE(r.witness);
    CHECK(r.embeddings == 4);
    CHECK(r.witness->copies.size() == 4);
    for (const auto& c : r.witness->copies)
        CHECK(c.alpha == Rational(1, 2));
    CHECK(verify_fractional_decomposition(r.witness->host, r.witness->copies).status == CoverStatus::exact);
}

TEST_CASE("C5 in K_{3,3} is infeasible")
{
    const auto r = fractional_decomposition_exists(named("C5", cycle_graph(5)),
                                                   WeightedGraph::from_graph(complete_multipartite({3, 3})));
    CHECK_FALSE(r.feasible);
    CHECK(r.embeddings == 0);
    Rational on_host = 0;
    for (const auto& [e, z] : r.potentials)
        on_host += z;
    CHECK(on_host < 0);
}

TEST_CASE("C5 in K7 is feasible and the witness verifies")
{
    const auto host = WeightedGraph::from_graph(complete_graph(7));
    const auto r = fractional_decomposition_exists(named("C5", cycle_graph(5)), host);
    REQUIRE(r.feasible);
    CHECK(verify_fractional_decomposition(host, r.witness->copies).status == CoverStatus::exact);
    for (const auto& [e, s] : test::resum(r.witness->copies))
        CHECK(s == 1);
}

TEST_CASE("weighted triangle hosts agree with the feasibility inequalities")
{
    std::mt19937_64 rng(404);
    int feasible = 0;
    for (int trial = 0; trial < 220; ++trial)
    {
        auto w = test::sorted_desc({test::random_rational(rng, 1, 30), test::random_rational(rng, 1, 30),
                                    test::random_rational(rng, 1, 30)});
        auto e = test::sorted_desc({test::random_rational(rng, 1, 30), test::random_rational(rng, 1, 30),
                                    test::random_rational(rng, 1, 30)});
        for (auto* v : {&w, &e})
            for (auto& x : *v)
                x = x == 0 ? Rational(1) : x;
        w = test::sorted_desc(w);
        e = test::sorted_desc(e);
        const TriangleTemplate tmpl(e[0], e[1], e[2]);
        const TriangleTemplate host_t(w[0], w[1], w[2]);
        const auto r = fractional_decomposition_exists({"T", tmpl.graph()}, host_t.graph());
        const bool expected = eq2_feasible(triple(w[0], w[1], w[2]), tmpl);
        CHECK(r.feasible == expected);
        if (r.feasible)
        {
            ++feasible;
            CHECK(verify_fractional_decomposition(host_t.graph(), r.witness->copies).status == CoverStatus::exact);
        }
        else
        {
            check_triangle_farkas(r, tmpl.graph(), host_t.graph());
        }
    }
    CHECK(feasible > 20);
}

TEST_CASE("adding a disjoint copy of W keeps a host feasible")
{
    const Template k3 = named("K3", complete_graph(3));
    for (int n : {4, 5, 7})
    {
        Graph g = complete_graph(n);
        Graph bigger(n + 3);
        for (const auto& e : g.edges())
            bigger.add_edge(e.u, e.v);
        bigger.add_edge(n, n + 1);
        bigger.add_edge(n, n + 2);
        bigger.add_edge(n + 1, n + 2);
        const bool before = fractional_decomposition_exists(k3, WeightedGraph::from_graph(g)).feasible;
        const bool after = fractional_decomposition_exists(k3, WeightedGraph::from_graph(bigger)).feasible;
        CHECK(before);
        CHECK(after);
    }
}
