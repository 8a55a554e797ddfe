#include "ehrhart/report.hpp"

#include <stdexcept>

namespace ehrhart {

const char* to_string(Status status) {
  switch (status) {
    case Status::Strict: return "strict";
    case Status::Equality: return "equality";
    case Status::Violation: return "violation";
    case Status::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

Status upper_bound_status(const Rational& value, const Rational& bound) {
  if (value < bound) return Status::Strict;
  if (value == bound) return Status::Equality;
  return Status::Violation;
}

Status lower_bound_status(const Rational& value, const Rational& bound) {
  return upper_bound_status(bound, value);
}

Status combine(Status a, Status b) {
  auto rank = [](Status s) {
    switch (s) {
      case Status::Violation: return 3;
      case Status::Equality: return 2;
      case Status::Strict: return 1;
      case Status::NotApplicable: return 0;
    }
    return 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

void CheckReport::set(const std::string& name, ReportValue value) {
  for (auto& [key, v] : values)
    if (key == name) {
      v = std::move(value);
      return;
    }
  values.emplace_back(name, std::move(value));
}

const ReportValue* CheckReport::find(const std::string& name) const {
  for (const auto& [key, v] : values)
    if (key == name) return &v;
  return nullptr;
}

const Rational& CheckReport::rational(const std::string& name) const {
  const ReportValue* v = find(name);
  if (!v || !std::holds_alternative<Rational>(*v))
    throw std::out_of_range("report has no rational value '" + name + "'");
  return std::get<Rational>(*v);
}

CheckReport not_applicable(std::string check, std::string reason) {
  CheckReport r;
  r.check = std::move(check);
  r.status = Status::NotApplicable;
  r.reason = std::move(reason);
  return r;
}

}  // namespace ehrhart
