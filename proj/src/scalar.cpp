#include "ehrhart/scalar.hpp"
#include "ehrhart/error.hpp"

#include <cctype>
#include <stdexcept>

namespace ehrhart {

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw std::invalid_argument("not a rational: '" + text + "'");
  Integer p(num[0] == '+' ? num.substr(1) : num);
  if (slash == std::string::npos) return Rational(p);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: '" + text + "'");
  Integer q(den);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(p, q);
}

std::string to_string(const RationalPoint& p) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p(i).str();
  }
  return s + ")";
}

RationalPoint to_rational(const LatticePoint& p) {
  RationalPoint q(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) q(i) = Rational(p(i));
  return q;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

LatticePoint to_lattice(const RationalPoint& p) {
  LatticePoint q(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (!is_integer(p(i)))
      throw Error(ErrorKind::NotLatticePolytope, "non-integral coordinate " + p(i).str());
    q(i) = numerator(p(i));
  }
  return q;
}

IntegerMatrix to_integer(const RationalMatrix& m) {
  IntegerMatrix q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j)))
        throw Error(ErrorKind::NotLatticePolytope, "non-integral entry " + m(i, j).str());
      q(i, j) = numerator(m(i, j));
    }
  return q;
}

LatticePoint primitive_direction(const RationalPoint& v, Rational* factor) {
  Integer den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) den = lcm(den, denominator(v(i)));
  LatticePoint w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) w(i) = numerator(v(i) * den);
  const Integer g = content(w);
  if (g == 0) throw std::invalid_argument("primitive_direction of zero vector");
  for (Eigen::Index i = 0; i < v.size(); ++i) w(i) /= g;
  if (factor) *factor = Rational(den, g);
  return w;
}

Integer content(const LatticePoint& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, abs(v(i)));
  return g;
}

RationalPoint unit_vector(Eigen::Index n, Eigen::Index i) {
  RationalPoint e = RationalPoint::Zero(n);
  e(i) = 1;
  return e;
}

RationalPoint ones(Eigen::Index n) { return RationalPoint::Constant(n, Rational(1)); }

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::OriginNotInterior: return "OriginNotInterior";
    case ErrorKind::NotLatticePolytope: return "NotLatticePolytope";
    case ErrorKind::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorKind::NotFano: return "NotFano";
    case ErrorKind::NoSpanningSelection: return "NoSpanningSelection";
    case ErrorKind::CertificationContradiction: return "CertificationContradiction";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ehrhart
