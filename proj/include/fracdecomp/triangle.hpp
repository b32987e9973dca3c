#ifndef FRACDECOMP_TRIANGLE_HPP
#define FRACDECOMP_TRIANGLE_HPP

#include <array>
#include <string>

#include "fracdecomp/core.hpp"

// Weighted triangles. A triangle on vertices (x, y, z) has three edge slots:
// slot 0 = xy, slot 1 = xz, slot 2 = yz. Weight triples are Vector3q in slot
// order.

namespace fracdecomp {

/** T_{e1,e2,e3} with e1 >= e2 >= e3 > 0. */
class TriangleTemplate
{
    public:
        TriangleTemplate(Rational e1, Rational e2, Rational e3);
        explicit TriangleTemplate(const Vector3q& e) : TriangleTemplate(e(0), e(1), e(2)) {}

        const Vector3q& weights() const { return e_; }
        const Rational& e1() const { return e_(0); }
        const Rational& e2() const { return e_(1); }
        const Rational& e3() const { return e_(2); }
        Rational sum() const { return e_.sum(); }

        /// Vertices {0,1,2} with w(0,1) = e1, w(0,2) = e2, w(1,2) = e3.
        WeightedGraph graph() const;
        /// "T<e1>,<e2>,<e3>", integers without a denominator.
        std::string name() const;

    private:
        Vector3q e_;
};

using Permutation3 = std::array<int, 3>;

/// The six permutations of {0,1,2} in lexicographic order.
const std::array<Permutation3, 6>& permutations3();

/// (e[pi[0]], e[pi[1]], e[pi[2]]): the weights a copy places on slots 0..2.
Vector3q permute(const Vector3q& e, const Permutation3& pi);

/**
 * Nonnegative coefficients, indexed like permutations3(), such that
 * sum_k coefficients[k] * permute(e, permutations3()[k]) reproduces the
 * target triple.
 */
struct TriangleDecomposition
{
    std::array<Rational, 6> coefficients;

    Vector3q reconstruct(const TriangleTemplate& e) const;
    int support() const;
};

/// Requires w sorted descending and positive (InputError otherwise).
bool eq2_feasible(const Vector3q& w, const TriangleTemplate& e);

/**
 * Fractional decomposition of T_w into scaled copies of T_e. Tries every
 * 3-subset of the permutations in lexicographic order, solving each 3x3
 * system exactly and skipping singular ones; falls back to Phase-I simplex
 * over all six columns when no subset gives a nonnegative solution.
 * Throws DecompositionFailure when eq2_feasible is false.
 */
TriangleDecomposition decompose_triangle(const Vector3q& w, const TriangleTemplate& e);

/**
 * Like decompose_triangle but for a triple in arbitrary slot order. `order`
 * records the sort: order[k] is the original slot of the k-th largest weight.
 * The returned coefficients refer to the original slots.
 */
struct SlotDecomposition
{
    TriangleDecomposition decomposition;
    std::array<int, 3> order;
};
SlotDecomposition decompose_any_order(const Vector3q& w, const TriangleTemplate& e);

/// (l-1) w3 >= w1 + w2, the reduced test against T_{l-2,1,1}.
bool cycle_feasibility_simplified(const Vector3q& w, int length);

/**
 * Embedding of TriangleTemplate::graph() onto the host triangle (x, y, z)
 * that places template edge pi[i] on slot i.
 */
std::array<int, 3> triangle_embedding(const Permutation3& pi, const std::array<int, 3>& host);

}  // namespace fracdecomp

#endif  // FRACDECOMP_TRIANGLE_HPP
