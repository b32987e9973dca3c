#include "fracdecomp/triangle.hpp"

#include <algorithm>

#include "fracdecomp/errors.hpp"
#include "fracdecomp/linalg.hpp"

namespace fracdecomp {

namespace {

std::string compact(const Rational& r)
{
    return denominator_of(r) == 1 ? numerator_of(r).str() : format_rational(r);
}

void require_sorted_positive(const Vector3q& w, const char* what)
{
    if (!(w(0) >= w(1) && w(1) >= w(2) && w(2) > 0))
        throw InputError(std::string(what) + " must be positive and sorted descending, got (" +
                         format_rational(w(0)) + ", " + format_rational(w(1)) + ", " + format_rational(w(2)) + ")");
}

}  // namespace

TriangleTemplate::TriangleTemplate(Rational e1, Rational e2, Rational e3)
{
    e_ << e1, e2, e3;
    require_sorted_positive(e_, "template weights");
}

WeightedGraph TriangleTemplate::graph() const
{
    WeightedGraph g(3);
    g.set_weight(0, 1, e1());
    g.set_weight(0, 2, e2());
    g.set_weight(1, 2, e3());
    return g;
}

std::string TriangleTemplate::name() const
{
    return "T" + compact(e1()) + "," + compact(e2()) + "," + compact(e3());
}

const std::array<Permutation3, 6>& permutations3()
{
    static const std::array<Permutation3, 6> all = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    return all;
}

Vector3q permute(const Vector3q& e, const Permutation3& pi)
{
    return Vector3q(e(pi[0]), e(pi[1]), e(pi[2]));
}

Vector3q TriangleDecomposition::reconstruct(const TriangleTemplate& e) const
{
    Vector3q sum = Vector3q::Zero();
    for (std::size_t k = 0; k < 6; ++k)
        if (coefficients[k] != 0)
            sum += coefficients[k] * permute(e.weights(), permutations3()[k]);
    return sum;
}

int TriangleDecomposition::support() const
{
    return static_cast<int>(std::count_if(coefficients.begin(), coefficients.end(),
                                          [](const Rational& c) { return c != 0; }));
}

bool eq2_feasible(const Vector3q& w, const TriangleTemplate& e)
{
    require_sorted_positive(w, "triangle weights");
    const Rational ws = w.sum();
    const Rational es = e.sum();
    // w3/ws >= e3/es and w1/ws <= e1/es, cross-multiplied (sums are positive).
    return w(2) * es >= e.e3() * ws && w(0) * es <= e.e1() * ws;
}

TriangleDecomposition decompose_triangle(const Vector3q& w, const TriangleTemplate& e)
{
    if (!eq2_feasible(w, e))
        throw DecompositionFailure("T(" + format_rational(w(0)) + ", " + format_rational(w(1)) + ", " +
                                   format_rational(w(2)) + ") has no fractional " + e.name() + "-decomposition");

    const auto& perms = permutations3();
    TriangleDecomposition out;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
            {
                Matrix3q m;
                m.col(0) = permute(e.weights(), perms[a]);
                m.col(1) = permute(e.weights(), perms[b]);
                m.col(2) = permute(e.weights(), perms[c]);
                auto x = solve_exact<Rational, 3>(m, w);
                if (!x || (*x)(0) < 0 || (*x)(1) < 0 || (*x)(2) < 0)
                    continue;
                out.coefficients[a] = (*x)(0);
                out.coefficients[b] = (*x)(1);
                out.coefficients[c] = (*x)(2);
                return out;
            }

    // Only reachable when the permuted vectors do not span R^3 (e1 = e2 = e3).
    MatrixXq columns(3, 6);
    for (int k = 0; k < 6; ++k)
        columns.col(k) = permute(e.weights(), perms[k]);
    VectorXq rhs = w;
    auto lp = phase_one<Rational>(columns, rhs);
    if (!lp.feasible)
        throw InternalError("feasible weighted triangle has no decomposition; solver bug");
    for (int k = 0; k < 6; ++k)
        out.coefficients[k] = lp.x(k);
    return out;
}

SlotDecomposition decompose_any_order(const Vector3q& w, const TriangleTemplate& e)
{
    SlotDecomposition out;
    out.order = {0, 1, 2};
    std::stable_sort(out.order.begin(), out.order.end(), [&](int a, int b) { return w(a) > w(b); });
    Vector3q sorted(w(out.order[0]), w(out.order[1]), w(out.order[2]));
    TriangleDecomposition inner = decompose_triangle(sorted, e);

    // Sorted slot k is original slot order[k]; move each permutation over.
    const auto& perms = permutations3();
    for (int k = 0; k < 6; ++k)
    {
        if (inner.coefficients[k] == 0)
            continue;
        Permutation3 moved{};
        for (int s = 0; s < 3; ++s)
            moved[out.order[s]] = perms[k][s];
        auto idx = std::find(perms.begin(), perms.end(), moved) - perms.begin();
        out.decomposition.coefficients[idx] += inner.coefficients[k];
    }
    return out;
}

bool cycle_feasibility_simplified(const Vector3q& w, int length)
{
    if (length < 3 || length % 2 == 0)
        throw InputError("cycle length must be odd and at least 3, got " + std::to_string(length));
    require_sorted_positive(w, "triangle weights");
    return (length - 1) * w(2) >= w(0) + w(1);
}

std::array<int, 3> triangle_embedding(const Permutation3& pi, const std::array<int, 3>& host)
{
    // Template edge j is opposite template vertex 2 - j, and slot i is
    // opposite host[2 - i]; an edge lands on a slot iff the opposite
    // vertices correspond.
    std::array<int, 3> phi{};
    for (int i = 0; i < 3; ++i)
        phi[2 - pi[i]] = host[2 - i];
    return phi;
}

}  // namespace fracdecomp
