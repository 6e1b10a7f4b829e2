#include "artin/core_model.hpp"

#include <algorithm>
#include <cstdlib>

#include "artin/checked.hpp"

namespace artin {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(Errc::LengthMismatch, std::string(what) + ": lengths " + std::to_string(a) +
                                          " and " + std::to_string(b));
  }
}

}  // namespace

ExponentVector::ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  for (auto e : entries_) {
    if (e < 0) throw Error(Errc::InvalidValue, "exponent entries must be nonnegative");
  }
}

ExponentVector ExponentVector::zero(std::size_t rank) {
  return ExponentVector(std::vector<std::int64_t>(rank, 0));
}

ExponentVector ExponentVector::unit(std::size_t rank, std::size_t index) {
  if (index >= rank) throw Error(Errc::IndexOutOfRange, "unit vector index");
  std::vector<std::int64_t> e(rank, 0);
  e[index] = 1;
  return ExponentVector(std::move(e));
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  require_same_length(size(), other.size(), "exponent sum");
  std::vector<std::int64_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = checked::add(entries_[i], other.entries_[i]);
  return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::scaled(std::int64_t factor) const {
  if (factor < 0) throw Error(Errc::InvalidValue, "negative scale factor");
  std::vector<std::int64_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = checked::mul(entries_[i], factor);
  return ExponentVector(std::move(out));
}

std::optional<ExponentVector> ExponentVector::minus(const ExponentVector& other) const {
  require_same_length(size(), other.size(), "exponent difference");
  std::vector<std::int64_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] < other.entries_[i]) return std::nullopt;
    out[i] = entries_[i] - other.entries_[i];
  }
  return ExponentVector(std::move(out));
}

OrderVector::OrderVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  for (auto e : entries_) {
    if (e > kMaxMagnitude || e < -kMaxMagnitude) {
      throw Error(Errc::InvalidValue, "order entry " + std::to_string(e) + " exceeds 2^31-1");
    }
  }
}

std::int64_t OrderVector::box_bound() const noexcept {
  std::int64_t b = 1;
  for (auto e : entries_) b = std::max(b, std::abs(e));
  return b;
}

DegreeVector::DegreeVector(std::vector<std::int64_t> entries,
                           std::optional<std::int64_t> group_order,
                           std::optional<std::string> group_name)
    : entries_(std::move(entries)),
      group_order_(group_order),
      group_name_(std::move(group_name)) {
  for (auto d : entries_) {
    if (d < 1) throw Error(Errc::InvalidValue, "character degrees must be >= 1");
  }
  if (group_order_) {
    auto violations = degree_law_violations(entries_, *group_order_);
    if (!violations.empty()) throw Error(Errc::InvalidValue, violations.front());
  }
}

std::vector<std::string> degree_law_violations(std::span<const std::int64_t> degrees,
                                               std::int64_t group_order) {
  std::vector<std::string> out;
  if (group_order < 1) {
    out.push_back("group order " + std::to_string(group_order) + " < 1");
    return out;
  }
  std::int64_t squares = 0;
  for (auto d : degrees) {
    if (d < 1) {
      out.push_back("degree " + std::to_string(d) + " < 1");
      continue;
    }
    squares = checked::add(squares, checked::mul(d, d));
    if (group_order % d != 0) {
      out.push_back(std::to_string(d) + " does not divide " + std::to_string(group_order));
    }
  }
  if (squares != group_order) {
    out.push_back("sum of squares " + std::to_string(squares) + " != " +
                  std::to_string(group_order));
  }
  return out;
}

Instance::Instance(DegreeVector d, OrderVector v, InstanceFlags f, std::optional<std::string> s0)
    : degrees(std::move(d)), orders(std::move(v)), flags(f), s0_label(std::move(s0)) {
  if (orders.size() == 0) throw Error(Errc::InvalidValue, "rank must be >= 1");
  require_same_length(degrees.size(), orders.size(), "instance degrees/orders");
}

std::int64_t ord(const ExponentVector& k, const OrderVector& v) {
  require_same_length(k.size(), v.size(), "ord");
  std::int64_t total = 0;
  for (std::size_t j = 0; j < k.size(); ++j) total = checked::add(total, checked::mul(k[j], v[j]));
  return total;
}

bool is_member_hol(const ExponentVector& k, const OrderVector& v) { return ord(k, v) >= 0; }

bool divides_ar(const ExponentVector& a, const ExponentVector& b) {
  return b.minus(a).has_value();
}

bool divides_hol(const ExponentVector& a, const ExponentVector& b, const OrderVector& v) {
  if (!is_member_hol(a, v) || !is_member_hol(b, v)) {
    throw Error(Errc::NotInHol, "divides_hol operands must lie in Hol");
  }
  auto quotient = b.minus(a);
  return quotient && is_member_hol(*quotient, v);
}

Admissibility is_admissible(const Instance& inst) {
  Admissibility out;
  if (inst.flags.require_dedekind) {
    std::int64_t zeta_order = ord(inst.degrees.as_exponents(), inst.orders);
    if (zeta_order < 0) {
      out.ok = false;
      out.reasons.push_back("dedekind: <d,v> = " + std::to_string(zeta_order) + " < 0");
    }
  }
  if (inst.flags.require_trivial_nonneg && inst.orders[0] < 0) {
    out.ok = false;
    out.reasons.push_back("trivial character: v_1 = " + std::to_string(inst.orders[0]) + " < 0");
  }
  return out;
}

}  // namespace artin
