// Exact scalar types and Eigen aliases shared by every module.
//
// All geometry in this library runs on GMP-backed integers and rationals.
// Eigen is used for the dense containers and expression arithmetic; the
// decompositions that need pivoting decisions live in linalg.hpp and never
// compare against a tolerance.
#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tukey {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorQ = Vector<Rational>;
using MatrixQ = Matrix<Rational>;
using VectorZ = Vector<Integer>;
using MatrixZ = Matrix<Integer>;

/// Violated input contract (bad sizes, degenerate data, out-of-range level).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data that is not in general position.
class GeneralPositionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// File-level failures: unreadable paths, malformed CSV rows.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Scalar>
int sign(const Scalar& v) {
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

/// Parses "12", "-0.125", "3e-4", "1.5E+2" or "7/3" exactly.
Rational parse_rational(std::string_view text);

/// "num/den" with den > 0, always including the denominator.
std::string to_fraction_string(const Rational& v);

/// Rounded decimal with `significant` significant digits (half away from zero).
std::string to_decimal_string(const Rational& v, int significant = 20);

/// Shortest exact text: a terminating decimal when one exists, else "num/den".
std::string to_exact_string(const Rational& v);

/// Multiplies `v` by the positive lcm of its denominators and divides out the
/// gcd of the result. Sign pattern of every dot product with `v` is preserved.
VectorZ clear_denominators(const VectorQ& v);

/// Divides an integer vector by the gcd of its entries (zero stays zero).
VectorZ primitive(VectorZ v);

VectorQ to_rational(const VectorZ& v);

/// Lexicographic comparison; -1, 0, +1.
int lex_compare(const VectorQ& a, const VectorQ& b);

inline bool is_zero(const VectorQ& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}
inline bool is_zero(const VectorZ& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

}  // namespace tukey
