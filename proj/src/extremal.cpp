#include "fracdecomp/extremal.hpp"

#include <array>
#include <functional>
#include <limits>

#include "fracdecomp/errors.hpp"

namespace fracdecomp {

std::string to_string(CertificateDirection d)
{
    return d == CertificateDirection::internal_heavy ? "internal-heavy" : "crossing-light";
}

namespace {

struct IntegerEdge
{
    int u;
    int v;
    std::int64_t weight;
};

// Weights multiplied by the lcm of their denominators. Ratios of sums are
// unchanged, and the partition searches run on machine integers.
struct IntegerWeights
{
    std::vector<IntegerEdge> edges;
    std::int64_t total = 0;
};

IntegerWeights scale_to_integers(const WeightedGraph& w)
{
    Integer scale = 1;
    for (const auto& [e, x] : w.weights())
        scale = boost::multiprecision::lcm(scale, denominator_of(x));
    IntegerWeights out;
    Integer total = 0;
    for (const auto& [e, x] : w.weights())
    {
        Integer iw = numerator_of(x) * (scale / denominator_of(x));
        total += iw;
        out.edges.push_back({e.u, e.v, 0});
        if (total > Integer(std::numeric_limits<std::int64_t>::max() / 4))
            throw InputError("weights are too large for the exhaustive partition search");
        out.edges.back().weight = iw.convert_to<std::int64_t>();
    }
    out.total = total.convert_to<std::int64_t>();
    return out;
}

}  // namespace

std::int64_t divisibility_modulus(const WeightedGraph& w)
{
    if (!w.is_unit())
        return 1;
    Graph g = w.underlying();
    return degree_gcd(g) * static_cast<std::int64_t>(g.size());
}

Rational rho_bipartite_min(const WeightedGraph& w)
{
    if (w.size() == 0)
        throw InputError("rho is undefined for an empty weighted graph");
    if (w.order() > 24)
        throw InputError("bipartition search supports at most 24 vertices, got " + std::to_string(w.order()));
    const IntegerWeights iw = scale_to_integers(w);

    // Vertex 0 stays on side 0; bit v-1 of mask is the side of vertex v.
    std::int64_t best = iw.total;
    const std::uint32_t masks = 1u << (w.order() - 1);
    for (std::uint32_t mask = 0; mask < masks; ++mask)
    {
        std::int64_t internal = 0;
        for (const auto& e : iw.edges)
        {
            int su = e.u == 0 ? 0 : (mask >> (e.u - 1)) & 1;
            int sv = e.v == 0 ? 0 : (mask >> (e.v - 1)) & 1;
            if (su == sv)
                internal += e.weight;
        }
        best = std::min(best, internal);
    }
    return Rational(best, iw.total);
}

std::optional<Rational> rho_fourpart_max(const WeightedGraph& w)
{
    if (w.size() == 0)
        throw InputError("rho is undefined for an empty weighted graph");
    if (w.order() > 16)
        throw InputError("four-part search supports at most 16 vertices, got " + std::to_string(w.order()));
    const IntegerWeights iw = scale_to_integers(w);
    const Graph g = w.underlying();
    const int n = w.order();

    std::vector<int> colour(n, -1);
    std::int64_t best = -1;

    auto evaluate = [&] {
        std::array<std::array<std::int64_t, 4>, 4> cross{};
        for (const auto& e : iw.edges)
        {
            cross[colour[e.u]][colour[e.v]] += e.weight;
            cross[colour[e.v]][colour[e.u]] += e.weight;
        }
        auto pair = [&](int a, int b) { return cross[a][b]; };
        std::int64_t v = std::max({pair(0, 1) + pair(2, 3), pair(0, 2) + pair(1, 3), pair(0, 3) + pair(1, 2)});
        best = std::max(best, v);
    };

    // Colours are assigned in first-use order, so each unlabeled partition
    // is visited once; the three pairings cover every labeling.
    std::function<void(int, int)> extend = [&](int v, int used) {
        if (v == n)
        {
            evaluate();
            return;
        }
        for (int c = 0; c < std::min(used + 1, 4); ++c)
        {
            bool independent = true;
            for (int u : g.neighbours(v))
                if (u < v && colour[u] == c)
                {
                    independent = false;
                    break;
                }
            if (!independent)
                continue;
            colour[v] = c;
            extend(v + 1, std::max(used, c + 1));
            colour[v] = -1;
        }
    };
    extend(0, 0);

    if (best < 0)
        return std::nullopt;
    return Rational(best, iw.total);
}

Rational lemma7_bound(const Rational& rho)
{
    if (!(rho > 0 && rho < 1))
        throw InputError("rho must lie in (0, 1), got " + format_rational(rho));
    return Rational(1, 2) + rho / (2 - 2 * rho);
}

Lemma8Bound lemma8_bound(const Rational& rho)
{
    if (!(rho >= Rational(1, 3) && rho < 1))
        throw InputError("rho must lie in [1/3, 1), got " + format_rational(rho));
    Lemma8Bound out;
    Rational radicand = (3 * rho - 1) / (1 + rho);
    Real r = Real(numerator_of(radicand)) / Real(denominator_of(radicand));
    out.strong = (Real(3) - sqrt(r)) / 4;
    out.weak = Rational(1, 2) + (1 - rho) / (2 + 6 * rho);
    return out;
}

namespace {

void require_order(int n, std::int64_t g)
{
    if (n <= 0 || n % (4 * g) != 0)
        throw InputError("n = " + std::to_string(n) + " must be a positive multiple of 4g = " + std::to_string(4 * g));
}

IndexedPartition consecutive_parts(std::initializer_list<int> sizes)
{
    IndexedPartition p;
    int next = 0;
    for (int s : sizes)
    {
        std::vector<int> part(s);
        for (int& v : part)
            v = next++;
        p.parts.push_back(std::move(part));
    }
    return p;
}

}  // namespace

EdgeBipartitionCertificate certificate_from_parts(const Graph& g, IndexedPartition parts, Rational rho,
                                                  CertificateDirection direction)
{
    EdgeBipartitionCertificate cert{Graph(g.order()), Graph(g.order()), std::move(rho), direction, std::move(parts)};
    const std::vector<int> owner = cert.parts.membership(g.order());
    for (const Edge& e : g.edges())
    {
        int a = owner[e.u], b = owner[e.v];
        bool in_g0 = direction == CertificateDirection::internal_heavy ? a == b : (a / 2 == b / 2 && a != b);
        (in_g0 ? cert.g0 : cert.g1).add_edge(e.u, e.v);
    }
    return cert;
}

ExtremalConstruction build_lemma7_graph(const WeightedGraph& w, int n)
{
    ExtremalConstruction out;
    out.modulus = divisibility_modulus(w);
    require_order(n, out.modulus);
    const Rational rho = rho_bipartite_min(w);
    if (rho == 0)
        throw InputError("W is bipartite (rho = 0); the construction needs rho > 0");

    const Rational bound = rho * n / (2 - 2 * rho);
    const std::int64_t step = 2 * out.modulus;
    // Largest multiple of step strictly below bound.
    Rational steps = bound / step;
    Integer k = numerator_of(steps) / denominator_of(steps);
    if (Rational(k) == steps)
        k -= 1;
    out.h = static_cast<int>(k.convert_to<std::int64_t>() * step);

    const int half = n / 2;
    if (out.h > half - 1)
        throw InputError("h = " + std::to_string(out.h) + " leaves no room for an h-regular graph on " +
                         std::to_string(half) + " vertices");

    out.host = Graph(n);
    for (int side = 0; side < 2; ++side)
        for (int i = 0; i < half; ++i)
            for (int d = 1; d <= out.h / 2; ++d)
            {
                int j = (i + d) % half;
                out.host.add_edge(side * half + i, side * half + j);
            }
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j)
            out.host.add_edge(i, half + j);

    out.certificate = certificate_from_parts(out.host, consecutive_parts({half, half}), rho,
                                             CertificateDirection::internal_heavy);
    return out;
}

namespace {

// h > gamma n with gamma = (1 + sqrt((3 rho - 1)/(1 + rho)))/4, i.e.
// 4h - n > 0 and (4h - n)^2 (1 + rho) > (3 rho - 1) n^2.
bool exceeds_gamma_n(std::int64_t h, int n, const Rational& rho)
{
    Integer lhs = Integer(4 * h - n);
    if (lhs <= 0)
        return false;
    return Rational(lhs * lhs) * (1 + rho) > (3 * rho - 1) * Rational(Integer(n) * n);
}

}  // namespace

ExtremalConstruction build_lemma8_graph(const WeightedGraph& w, int n)
{
    ExtremalConstruction out;
    out.modulus = divisibility_modulus(w);
    require_order(n, out.modulus);
    auto rho = rho_fourpart_max(w);
    if (!rho)
        throw InputError("W has no partition into four independent sets");
    if (*rho >= 1)
        throw InputError("rho = " + format_rational(*rho) + " must be below 1");

    const std::int64_t step = 2 * out.modulus;
    std::int64_t h = 0;
    while (!exceeds_gamma_n(h, n, *rho))
        h += step;
    if (2 * h >= n)
        throw InputError("n = " + std::to_string(n) + " is too small: h = " + std::to_string(h) +
                         " is not below n/2");
    out.h = static_cast<int>(h);

    const int rest = n / 2 - out.h;
    IndexedPartition parts = consecutive_parts({out.h, out.h, rest, rest});
    const std::vector<int> owner = parts.membership(n);
    out.host = Graph(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (owner[u] != owner[v])
                out.host.add_edge(u, v);

    out.certificate = certificate_from_parts(out.host, std::move(parts), *rho, CertificateDirection::crossing_light);
    return out;
}

std::optional<int> smallest_lemma8_order(const WeightedGraph& w, int limit)
{
    const std::int64_t g = divisibility_modulus(w);
    auto rho = rho_fourpart_max(w);
    if (!rho || *rho >= 1)
        return std::nullopt;
    for (std::int64_t n = 4 * g; n <= limit; n += 4 * g)
    {
        std::int64_t h = 0;
        while (!exceeds_gamma_n(h, static_cast<int>(n), *rho))
            h += 2 * g;
        if (2 * h < n)
            return static_cast<int>(n);
    }
    return std::nullopt;
}

CertificateCheck check_certificate(const Graph& g, const EdgeBipartitionCertificate& cert, const WeightedGraph& w)
{
    auto fail = [](std::string reason) { return CertificateCheck{false, std::move(reason)}; };
    const bool heavy = cert.direction == CertificateDirection::internal_heavy;
    const int expected_parts = heavy ? 2 : 4;

    if (cert.parts.part_count() != expected_parts)
        return fail("expected " + std::to_string(expected_parts) + " vertex parts, got " +
                    std::to_string(cert.parts.part_count()));
    std::vector<int> owner(g.order(), -1);
    for (int i = 0; i < expected_parts; ++i)
        for (int v : cert.parts.parts[i])
        {
            if (v < 0 || v >= g.order())
                return fail("part vertex " + std::to_string(v) + " is not a host vertex");
            if (owner[v] >= 0)
                return fail("vertex " + std::to_string(v) + " lies in two parts");
            owner[v] = i;
        }
    for (int v = 0; v < g.order(); ++v)
        if (owner[v] < 0)
            return fail("vertex " + std::to_string(v) + " is in no part");

    if (cert.g0.order() != g.order() || cert.g1.order() != g.order())
        return fail("G0/G1 vertex count differs from the host");
    if (cert.g0.size() + cert.g1.size() != g.size())
        return fail("|E(G0)| + |E(G1)| != |E(G)|");
    for (const Edge& e : g.edges())
    {
        bool in0 = cert.g0.has_edge(e.u, e.v);
        bool in1 = cert.g1.has_edge(e.u, e.v);
        if (in0 == in1)
            return fail("host edge " + to_string(e) + (in0 ? " is in both G0 and G1" : " is in neither G0 nor G1"));
        int a = owner[e.u], b = owner[e.v];
        if (!heavy && a == b)
            return fail("part " + std::to_string(a) + " is not independent: edge " + to_string(e));
        bool should0 = heavy ? a == b : a / 2 == b / 2;
        if (in0 != should0)
            return fail("edge " + to_string(e) + " is on the wrong side of the bipartition");
    }

    const Rational& rho = cert.rho;
    if (!(rho > 0 && rho < 1))
        return fail("rho must lie in (0, 1)");
    if (heavy)
    {
        if (rho_bipartite_min(w) < rho)
            return fail("rho " + format_rational(rho) + " exceeds the bipartition minimum " +
                        format_rational(rho_bipartite_min(w)));
    }
    else
    {
        auto best = rho_fourpart_max(w);
        if (!best)
            return fail("W has no partition into four independent sets");
        if (*best > rho)
            return fail("rho " + format_rational(rho) + " is below the four-part maximum " + format_rational(*best));
    }

    // |G0| / |G1| against rho / (1 - rho), cross-multiplied.
    const Rational lhs = Rational(static_cast<std::int64_t>(cert.g0.size())) * (1 - rho);
    const Rational rhs = rho * static_cast<std::int64_t>(cert.g1.size());
    if (heavy ? !(lhs < rhs) : !(lhs > rhs))
        return fail(std::string("edge-count ratio inequality fails (|G0| = ") + std::to_string(cert.g0.size()) +
                    ", |G1| = " + std::to_string(cert.g1.size()) + ")");
    return {true, {}};
}

}  // namespace fracdecomp
