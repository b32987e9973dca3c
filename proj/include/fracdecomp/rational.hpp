#ifndef FRACDECOMP_RATIONAL_HPP
#define FRACDECOMP_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace fracdecomp {

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
/// Arbitrary-precision integer.
using Integer = boost::multiprecision::mpz_int;
/// 100 significant decimal digits; used only for irrational bounds.
using Real = boost::multiprecision::mpfr_float_100;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

using MatrixXq = MatrixX<Rational>;
using VectorXq = VectorX<Rational>;
using Vector3q = Vector3<Rational>;
using Matrix3q = Matrix3<Rational>;

/// Parses "p/q" or "p". Throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q", integers included ("3/1").
std::string format_rational(const Rational& value);

/// Fixed-point rendering with the given number of fractional digits.
std::string format_real(const Real& value, int digits);

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

}  // namespace fracdecomp

#endif  // FRACDECOMP_RATIONAL_HPP
