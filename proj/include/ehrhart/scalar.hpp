#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <compare>
#include <string>
#include <vector>

namespace ehrhart {

/// Exact rational scalar; always in lowest terms with positive denominator.
using Rational = boost::multiprecision::mpq_rational;
/// Arbitrary-precision integer.
using Integer = boost::multiprecision::mpz_int;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalPoint = VectorX<Rational>;
using LatticePoint = VectorX<Integer>;
using RationalMatrix = MatrixX<Rational>;
using IntegerMatrix = MatrixX<Integer>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Integer floor(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

inline Integer ceil(const Rational& q) { return -floor(-q); }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

/// Rational (n+1)^n / n! style powers.
inline Rational pow(const Rational& base, unsigned exponent) {
  Rational r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

std::string to_string(const RationalPoint& p);

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

template <typename Derived>
bool is_integral(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_integer(Rational(v(i)))) return false;
  return true;
}

/// Lexicographic three-way comparison of equally sized vectors.
template <typename DerivedA, typename DerivedB>
std::strong_ordering lex_compare(const Eigen::MatrixBase<DerivedA>& a,
                                 const Eigen::MatrixBase<DerivedB>& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return std::strong_ordering::less;
    if (b(i) < a(i)) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

struct LexLess {
  template <typename A, typename B>
  bool operator()(const A& a, const B& b) const {
    return lex_compare(a, b) == std::strong_ordering::less;
  }
};

template <typename Derived>
bool vectors_equal(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Derived>& b) {
  return a.size() == b.size() && lex_compare(a, b) == std::strong_ordering::equal;
}

RationalPoint to_rational(const LatticePoint& p);
RationalMatrix to_rational(const IntegerMatrix& m);
/// Requires every entry to be integral.
LatticePoint to_lattice(const RationalPoint& p);
IntegerMatrix to_integer(const RationalMatrix& m);

/// Positive multiple of `v` that is a primitive integer vector; the
/// returned factor satisfies primitive = factor * v. `v` must be nonzero.
LatticePoint primitive_direction(const RationalPoint& v, Rational* factor = nullptr);

/// gcd of the coordinates (0 for the zero vector).
Integer content(const LatticePoint& v);

RationalPoint unit_vector(Eigen::Index n, Eigen::Index i);
RationalPoint ones(Eigen::Index n);

}  // namespace ehrhart
