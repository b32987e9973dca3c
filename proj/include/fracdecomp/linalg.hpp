#ifndef FRACDECOMP_LINALG_HPP
#define FRACDECOMP_LINALG_HPP

#include <optional>
#include <vector>

#include "fracdecomp/errors.hpp"
#include "fracdecomp/rational.hpp"

// Exact dense linear algebra over an ordered field. Nothing here compares
// against a tolerance, so Scalar must be exact (Rational in practice).

namespace fracdecomp {

/**
 * Solves a x = b by Gaussian elimination, pivoting on the first nonzero entry
 * of each column. Returns nullopt when `a` is singular.
 */
template <typename Scalar, int N>
std::optional<Eigen::Matrix<Scalar, N, 1>> solve_exact(Eigen::Matrix<Scalar, N, N> a,
                                                       Eigen::Matrix<Scalar, N, 1> b)
{
    const Eigen::Index n = a.rows();
    for (Eigen::Index col = 0; col < n; ++col)
    {
        Eigen::Index pivot = col;
        while (pivot < n && a(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        if (pivot != col)
        {
            a.row(pivot).swap(a.row(col));
            std::swap(b(pivot), b(col));
        }
        for (Eigen::Index r = col + 1; r < n; ++r)
        {
            if (a(r, col) == 0)
                continue;
            Scalar factor = a(r, col) / a(col, col);
            a.row(r) -= factor * a.row(col);
            b(r) -= factor * b(col);
        }
    }
    Eigen::Matrix<Scalar, N, 1> x(n);
    for (Eigen::Index r = n - 1; r >= 0; --r)
    {
        Scalar acc = b(r);
        for (Eigen::Index c = r + 1; c < n; ++c)
            acc -= a(r, c) * x(c);
        x(r) = acc / a(r, r);
    }
    return x;
}

template <typename Scalar>
struct PhaseOneResult
{
    bool feasible = false;
    /// A nonnegative solution of A x = b when feasible.
    VectorX<Scalar> x;
    /// When infeasible: y with y^T A <= 0 componentwise and y^T b > 0.
    VectorX<Scalar> farkas;
    /// Optimal value of the auxiliary problem (sum of artificials).
    Scalar infeasibility;
    int pivots = 0;
};

/**
 * Decides feasibility of { x >= 0 : A x = b } with the Phase-I simplex
 * method: one artificial per row, minimize their sum, Bland's rule for both
 * the entering and the leaving variable so the pivot sequence is
 * deterministic and terminates.
 */
template <typename Scalar>
PhaseOneResult<Scalar> phase_one(const MatrixX<Scalar>& A, const VectorX<Scalar>& b)
{
    const Eigen::Index m = A.rows();
    const Eigen::Index n = A.cols();
    if (b.size() != m)
        throw InputError("phase_one: right-hand side has the wrong length");

    // Tableau [A | I | b], rows sign-normalized so that b >= 0.
    MatrixX<Scalar> T = MatrixX<Scalar>::Zero(m, n + m + 1);
    std::vector<int> sign(m, 1);
    for (Eigen::Index i = 0; i < m; ++i)
    {
        sign[i] = b(i) < 0 ? -1 : 1;
        for (Eigen::Index j = 0; j < n; ++j)
            T(i, j) = sign[i] < 0 ? Scalar(-A(i, j)) : A(i, j);
        T(i, n + i) = 1;
        T(i, n + m) = sign[i] < 0 ? Scalar(-b(i)) : b(i);
    }

    // Reduced costs for cost vector (0, ..., 0, 1, ..., 1); last entry holds
    // minus the objective value.
    VectorX<Scalar> reduced = VectorX<Scalar>::Zero(n + m + 1);
    for (Eigen::Index i = 0; i < m; ++i)
    {
        for (Eigen::Index j = 0; j < n; ++j)
            reduced(j) -= T(i, j);
        reduced(n + m) -= T(i, n + m);
    }

    std::vector<Eigen::Index> basis(m);
    for (Eigen::Index i = 0; i < m; ++i)
        basis[i] = n + i;

    PhaseOneResult<Scalar> result;
    for (;;)
    {
        Eigen::Index entering = -1;
        for (Eigen::Index j = 0; j < n + m; ++j)
            if (reduced(j) < 0)
            {
                entering = j;
                break;
            }
        if (entering < 0)
            break;

        Eigen::Index leave = -1;
        Scalar best;
        for (Eigen::Index i = 0; i < m; ++i)
        {
            if (T(i, entering) <= 0)
                continue;
            Scalar ratio = T(i, n + m) / T(i, entering);
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave]))
            {
                leave = i;
                best = ratio;
            }
        }
        // The auxiliary objective is bounded below by 0.
        if (leave < 0)
            throw InternalError("phase_one: unbounded auxiliary problem");

        Scalar p = T(leave, entering);
        T.row(leave) /= p;
        for (Eigen::Index i = 0; i < m; ++i)
        {
            if (i == leave || T(i, entering) == 0)
                continue;
            Scalar f = T(i, entering);
            T.row(i) -= f * T.row(leave);
        }
        if (reduced(entering) != 0)
        {
            Scalar f = reduced(entering);
            reduced -= f * T.row(leave).transpose();
        }
        basis[leave] = entering;
        ++result.pivots;
    }

    result.infeasibility = -reduced(n + m);
    result.feasible = result.infeasibility == 0;
    if (result.feasible)
    {
        result.x = VectorX<Scalar>::Zero(n);
        for (Eigen::Index i = 0; i < m; ++i)
            if (basis[i] < n)
                result.x(basis[i]) = T(i, n + m);
    }
    else
    {
        // Simplex multipliers: y_i = c_{art i} - reduced_{art i} = 1 - reduced.
        result.farkas = VectorX<Scalar>(m);
        for (Eigen::Index i = 0; i < m; ++i)
        {
            Scalar y = Scalar(1) - reduced(n + i);
            result.farkas(i) = sign[i] < 0 ? Scalar(-y) : y;
        }
    }
    return result;
}

}  // namespace fracdecomp

#endif  // FRACDECOMP_LINALG_HPP
