#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fracdecomp/errors.hpp"
#include "fracdecomp/extremal.hpp"
#include "fracdecomp/generators.hpp"
#include "fracdecomp/oracle.hpp"
#include "fracdecomp/triangle.hpp"
#include "support.hpp"

using namespace fracdecomp;

namespace {

WeightedGraph plain(const Graph& g) { return WeightedGraph::from_graph(g); }

Rational rho_bipartite_by_brute_force(const WeightedGraph& w)
{
    const int n = w.order();
    const Rational total = total_weight(w);
    Rational best = 1;
    for (int mask = 0; mask < (1 << n); ++mask)
    {
        Rational internal = 0;
        for (const auto& [e, x] : w.weights())
            if (((mask >> e.u) & 1) == ((mask >> e.v) & 1))
                internal += x;
        best = std::min(best, Rational(internal / total));
    }
    return best;
}

// Every labelling V -> {0,1,2,3}, every pairing; no symmetry pruning.
std::optional<Rational> rho_fourpart_by_brute_force(const WeightedGraph& w)
{
    const int n = w.order();
    const Rational total = total_weight(w);
    std::optional<Rational> best;
    std::vector<int> c(n, 0);
    long limit = 1;
    for (int i = 0; i < n; ++i)
        limit *= 4;
    for (long code = 0; code < limit; ++code)
    {
        long rest = code;
        for (int i = 0; i < n; ++i, rest /= 4)
            c[i] = static_cast<int>(rest % 4);
        bool proper = true;
        for (const auto& [e, x] : w.weights())
            proper = proper && c[e.u] != c[e.v];
        if (!proper)
            continue;
        for (int partner : {1, 2, 3})
        {
            // Pair part 0 with `partner`, the other two together.
            auto matched = [&](int a, int b) {
                if (a > b)
                    std::swap(a, b);
                if (a == 0)
                    return b == partner;
                return b != partner && a != partner;
            };
            Rational on = 0;
            for (const auto& [e, x] : w.weights())
                if (matched(c[e.u], c[e.v]))
                    on += x;
            if (!best || on / total > *best)
                best = on / total;
        }
    }
    return best;
}

WeightedGraph random_weighted(std::mt19937_64& rng, int n, double p)
{
    WeightedGraph w(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                w.set_weight(u, v, test::random_rational(rng, 1, 5, 3));
    if (w.size() == 0)
        w.set_weight(0, 1, 1);
    return w;
}

}  // namespace

TEST_CASE("divisibility modulus")
{
    CHECK(divisibility_modulus(plain(cycle_graph(5))) == 10);
    CHECK(divisibility_modulus(plain(complete_multipartite({2, 1, 1}))) == 5);
    CHECK(divisibility_modulus(TriangleTemplate(3, 1, 1).graph()) == 1);
}

TEST_CASE("rho_bipartite_min")
{
    CHECK(rho_bipartite_min(plain(cycle_graph(5))) == Rational(1, 5));
    CHECK(rho_bipartite_min(plain(cycle_graph(6))) == 0);
    CHECK(rho_bipartite_min(plain(complete_multipartite({3, 2}))) == 0);
    CHECK_THROWS_AS(rho_bipartite_min(WeightedGraph(3)), InputError);

    std::mt19937_64 rng(100);
    for (int trial = 0; trial < 100; ++trial)
    {
        auto e = test::sorted_desc({test::random_rational(rng, 1, 20), test::random_rational(rng, 1, 20),
                                    test::random_rational(rng, 1, 20)});
        for (auto& x : e)
            x = x == 0 ? Rational(1) : x;
        e = test::sorted_desc(e);
        const TriangleTemplate t(e[0], e[1], e[2]);
        CHECK(rho_bipartite_min(t.graph()) == t.e3() / t.sum());
    }
    for (int trial = 0; trial < 30; ++trial)
    {
        const auto w = random_weighted(rng, 8, 0.5);
        CHECK(rho_bipartite_min(w) == rho_bipartite_by_brute_force(w));
    }
}

TEST_CASE("rho_fourpart_max")
{
    const TriangleTemplate t(5, 3, 2);
    CHECK(rho_fourpart_max(t.graph()) == Rational(1, 2));
    CHECK(rho_fourpart_max(plain(complete_multipartite({2, 1, 1}))) == Rational(2, 5));
    WeightedGraph edge(2);
    edge.set_weight(0, 1, 1);
    CHECK(rho_fourpart_max(edge) == Rational(1));
    CHECK_FALSE(rho_fourpart_max(plain(complete_graph(5))));

    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 30; ++trial)
    {
        const auto w = random_weighted(rng, 7, 0.5);
        CHECK(rho_fourpart_max(w) == rho_fourpart_by_brute_force(w));
    }
    for (int a = 1; a <= 5; ++a)
        CHECK(rho_fourpart_max(plain(complete_multipartite({a, 1, 1}))) == Rational(a, 2 * a + 1));
}

TEST_CASE("lemma7_bound")
{
    CHECK(lemma7_bound(Rational(1, 5)) == Rational(5, 8));
    for (int l = 3; l <= 21; l += 2)
        CHECK(lemma7_bound(Rational(1, l)) == Rational(1, 2) + Rational(1, 2 * l - 2));
    CHECK(lemma7_bound(Rational(1, 1000000)) - Rational(1, 2) < Rational(1, 1000000));
    // K_{a,a,1}: rho = 1/(a+2) gives 1/2 + 1/(2a+2).
    for (int a = 1; a <= 5; ++a)
    {
        const Rational rho = rho_bipartite_min(plain(complete_multipartite({a, a, 1})));
        CHECK(rho == Rational(1, a + 2));
        CHECK(lemma7_bound(rho) == Rational(1, 2) + Rational(1, 2 * a + 2));
    }
    CHECK_THROWS_AS(lemma7_bound(0), InputError);
    CHECK_THROWS_AS(lemma7_bound(1), InputError);
}

TEST_CASE("lemma8_bound")
{
    using boost::multiprecision::sqrt;
    const Real expected = (Real(21) - sqrt(Real(7))) / 28;
    CHECK(abs(lemma8_bound(Rational(2, 5)).strong - expected) < Real("1e-50"));

    const auto third = lemma8_bound(Rational(1, 3));
    CHECK(third.strong == Real(3) / 4);
    CHECK(third.weak == Rational(2, 3));

    const Real limit = (Real(9) - sqrt(Real(3))) / 12;
    CHECK(abs(lemma8_bound(Rational(1, 2)).strong - limit) < Real("1e-50"));

    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 200; ++trial)
    {
        const long den = 1 + static_cast<long>(rng() % 1000);
        const long lo = (den + 2) / 3;
        const long num = lo + static_cast<long>(rng() % static_cast<unsigned long>(den - lo));
        const Rational rho(num, den);
        if (rho < Rational(1, 3) || rho >= 1)
            continue;
        const auto b = lemma8_bound(rho);
        CHECK(b.strong >= Real(b.weak) - Real("1e-50"));
    }
    CHECK_THROWS_AS(lemma8_bound(Rational(1, 4)), InputError);
    CHECK_THROWS_AS(lemma8_bound(1), InputError);
}

TEST_CASE("bipartition construction for C5")
{
    const auto c5 = plain(cycle_graph(5));
    const auto big = build_lemma7_graph(c5, 240);
    CHECK(big.modulus == 10);
    CHECK(big.certificate.rho == Rational(1, 5));
    CHECK(big.h == 20);
    CHECK(big.certificate.g0.size() == 2400);
    CHECK(big.certificate.g1.size() == 14400);
    CHECK(big.host.min_degree() == 140);
    for (int v = 0; v < 240; ++v)
        CHECK(big.host.degree(v) == 140);
    CHECK(verify_certificate(big.host, big.certificate, c5));
    CHECK(is_divisible(big.host, cycle_graph(5)));

    const auto small = build_lemma7_graph(c5, 40);
    CHECK(small.h == 0);
    CHECK(small.host == complete_multipartite({20, 20}));
    CHECK(verify_certificate(small.host, small.certificate, c5));

    CHECK_THROWS_AS(build_lemma7_graph(c5, 60), InputError);
}

TEST_CASE("four-part construction for K_{2,1,1}")
{
    const auto k = plain(complete_multipartite({2, 1, 1}));
    const auto n = smallest_lemma8_order(k);
    REQUIRE(n);
    CHECK(*n == 80);
    const auto c = build_lemma8_graph(k, *n);
    CHECK(c.h == 30);
    CHECK(c.certificate.rho == Rational(2, 5));
    const long h = c.h, half = *n / 2;
    // (h^2 + (n/2-h)^2) / (2h(n-2h)) > 2/3, the defining inequality.
    CHECK(3 * (h * h + (half - h) * (half - h)) > 2 * 2 * h * (*n - 2 * h));
    for (int v = 0; v < *n; ++v)
    {
        const int d = c.host.degree(v);
        CHECK((d == half + h || d == *n - h));
    }
    CHECK(verify_certificate(c.host, c.certificate, k));
    CHECK(is_divisible(c.host, complete_multipartite({2, 1, 1})));

    // Smaller orders divisible by 4g have no admissible h.
    for (int m = 20; m < 80; m += 20)
        CHECK_THROWS_AS(build_lemma8_graph(k, m), InputError);
}

TEST_CASE("tampered certificates are rejected")
{
    const auto c5 = plain(cycle_graph(5));
    const auto c = build_lemma7_graph(c5, 240);

    auto swapped = c.certificate;
    std::swap(swapped.g0, swapped.g1);
    CHECK_FALSE(verify_certificate(c.host, swapped, c5));

    auto greedy = c.certificate;
    greedy.rho = Rational(2, 5);
    const auto check = check_certificate(c.host, greedy, c5);
    CHECK_FALSE(check.valid);
    CHECK_FALSE(check.reason.empty());

    auto wrong_direction = c.certificate;
    wrong_direction.direction = CertificateDirection::crossing_light;
    CHECK_FALSE(verify_certificate(c.host, wrong_direction, c5));
}

TEST_CASE("oracle-sized analogues: certificate validity implies infeasibility")
{
    SUBCASE("two halves, sparse inside, complete across")
    {
        // n = 10, G1 = K_{5,5}, G0 = two matching edges per half: 4/25 < 1/4.
        Graph g = complete_multipartite({5, 5});
        for (auto [a, b] : {std::pair{0, 1}, {2, 3}, {5, 6}, {7, 8}})
            g.add_edge(a, b);
        const auto c5 = plain(cycle_graph(5));
        const auto cert = certificate_from_parts(g, IndexedPartition{multipartite_parts({5, 5})}, Rational(1, 5),
                                                 CertificateDirection::internal_heavy);
        CHECK(cert.g0.size() == 4);
        CHECK(cert.g1.size() == 25);
        REQUIRE(verify_certificate(g, cert, c5));
        CHECK_FALSE(fractional_decomposition_exists({"C5", c5}, plain(g)).feasible);
    }
    SUBCASE("complete 4-partite with parts 1, 1, 3, 3")
    {
        // G0 = 1 + 9 edges, G1 = 12 edges: 10/12 > 2/3.
        const Graph g = complete_multipartite({1, 1, 3, 3});
        const auto k = plain(complete_multipartite({2, 1, 1}));
        const auto cert = certificate_from_parts(g, IndexedPartition{multipartite_parts({1, 1, 3, 3})},
                                                 Rational(2, 5), CertificateDirection::crossing_light);
        CHECK(cert.g0.size() == 10);
        CHECK(cert.g1.size() == 12);
        REQUIRE(verify_certificate(g, cert, k));
        CHECK_FALSE(fractional_decomposition_exists({"K211", k}, plain(g)).feasible);
    }
    SUBCASE("random small instances")
    {
        std::mt19937_64 rng(31);
        const auto c5 = plain(cycle_graph(5));
        int certified = 0;
        for (int trial = 0; trial < 40; ++trial)
        {
            Graph g = complete_multipartite({4, 4});
            std::bernoulli_distribution coin(0.3);
            for (int half = 0; half < 2; ++half)
                for (int u = 4 * half; u < 4 * half + 4; ++u)
                    for (int v = u + 1; v < 4 * half + 4; ++v)
                        if (coin(rng))
                            g.add_edge(u, v);
            const auto cert = certificate_from_parts(g, IndexedPartition{multipartite_parts({4, 4})},
                                                     Rational(1, 5), CertificateDirection::internal_heavy);
            if (!verify_certificate(g, cert, c5))
                continue;
            ++certified;
            CHECK_FALSE(fractional_decomposition_exists({"C5", c5}, plain(g)).feasible);
        }
        CHECK(certified > 0);
    }
}
