#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <string_view>

namespace bordersub {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;
using MatrixZ = Matrix<BigInt>;

/// Parses "p/q" or "p" (optional sign on p). Throws std::invalid_argument on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q", e.g. "3/1", "-1/2".
std::string format_rational(const Rational& value);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Narrowing with a range check; throws std::overflow_error.
std::int64_t to_int64(const BigInt& value);
std::int64_t to_int64(const Rational& value);

}  // namespace bordersub
