#ifndef FRACDECOMP_TESTS_SUPPORT_HPP
#define FRACDECOMP_TESTS_SUPPORT_HPP

#include <map>
#include <random>
#include <vector>

#include "fracdecomp/core.hpp"
#include "fracdecomp/triangle.hpp"

namespace fracdecomp::test {

inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den = 12)
{
    std::uniform_int_distribution<int> den(1, max_den);
    const int d = den(rng);
    std::uniform_int_distribution<int> num(lo * d, hi * d);
    return Rational(num(rng), d);
}

/// Weights per host edge recomputed from scratch: no shared code with the
/// library's verifier beyond the data types.
inline std::map<Edge, Rational> resum(const std::vector<ScaledCopy>& copies)
{
    std::map<Edge, Rational> sum;
    for (const auto& c : copies)
        for (const auto& [f, w] : c.pattern->graph.weights())
        {
            int a = c.embedding.at(f.u);
            int b = c.embedding.at(f.v);
            sum[a < b ? Edge{a, b} : Edge{b, a}] += c.alpha * w;
        }
    return sum;
}

inline std::vector<Rational> sorted_desc(std::vector<Rational> v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

inline Vector3q triple(const Rational& a, const Rational& b, const Rational& c)
{
    Vector3q v;
    v << a, b, c;
    return v;
}

}  // namespace fracdecomp::test

#endif  // FRACDECOMP_TESTS_SUPPORT_HPP
