#pragma once

#include "ehrhart/polytope.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ehrhart {

enum class Status { Strict, Equality, Violation, NotApplicable };

const char* to_string(Status status);

/// Status of `value <= bound`.
Status upper_bound_status(const Rational& value, const Rational& bound);
/// Status of `value >= bound`.
Status lower_bound_status(const Rational& value, const Rational& bound);
/// Violation dominates equality, which dominates strict.
Status combine(Status a, Status b);

using ReportValue = std::variant<Rational, RationalPoint, bool, std::string, std::vector<RationalPoint>>;
using Witness = std::variant<UnimodularAffineMap, RationalAffineMap, HalfSpace, RationalPoint>;

/// Verdict of one theorem-level check. For `Equality` the primary computed
/// value equals `bound` exactly; a `Violation` carries the offending values.
struct CheckReport {
  std::string check;
  std::string input;
  std::vector<std::pair<std::string, ReportValue>> values;
  std::optional<Rational> bound;
  Status status = Status::NotApplicable;
  std::optional<Witness> witness;
  std::string reason;
  std::vector<CheckReport> attached;

  void set(const std::string& name, ReportValue value);
  const ReportValue* find(const std::string& name) const;
  /// Throws std::out_of_range when absent or not a rational.
  const Rational& rational(const std::string& name) const;
};

CheckReport not_applicable(std::string check, std::string reason);

}  // namespace ehrhart
