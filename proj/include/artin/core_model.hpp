#pragma once

// Exponent-vector model of the semigroup Ar generated by the Artin L-functions
// f_1..f_r. An element f_1^k_1 ... f_r^k_r is the vector k in N^r, and the
// order at s0 is the linear functional k -> <k, v> for a fixed order profile v.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "artin/error.hpp"

namespace artin {

/// Element of Ar as its exponents over f_1..f_r. All entries are >= 0; the
/// zero vector is the identity.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::int64_t> entries);
  ExponentVector(std::initializer_list<std::int64_t> entries)
      : ExponentVector(std::vector<std::int64_t>(entries)) {}

  static ExponentVector zero(std::size_t rank);
  static ExponentVector unit(std::size_t rank, std::size_t index);

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  bool is_zero() const noexcept;

  /// Componentwise sum (checked).
  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector scaled(std::int64_t factor) const;
  /// b - a when it stays in N^r, otherwise nullopt.
  std::optional<ExponentVector> minus(const ExponentVector& other) const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Order profile v_j = ord_{s0} f_j. Entries are limited to 32-bit magnitude
/// so every product against a desk-scale exponent fits in 64 bits.
class OrderVector {
 public:
  static constexpr std::int64_t kMaxMagnitude = 2147483647;

  OrderVector() = default;
  explicit OrderVector(std::vector<std::int64_t> entries);
  OrderVector(std::initializer_list<std::int64_t> entries)
      : OrderVector(std::vector<std::int64_t>(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  /// max(1, max_j |v_j|)
  std::int64_t box_bound() const noexcept;

  friend auto operator<=>(const OrderVector&, const OrderVector&) = default;
  friend bool operator==(const OrderVector&, const OrderVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Character degrees d_j = chi_j(1). The same vector is the exponent vector of
/// the Dedekind zeta function zeta_K = prod f_j^{d_j}.
class DegreeVector {
 public:
  DegreeVector() = default;
  explicit DegreeVector(std::vector<std::int64_t> entries,
                        std::optional<std::int64_t> group_order = std::nullopt,
                        std::optional<std::string> group_name = std::nullopt);
  DegreeVector(std::initializer_list<std::int64_t> entries)
      : DegreeVector(std::vector<std::int64_t>(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  const std::optional<std::int64_t>& group_order() const noexcept { return group_order_; }
  const std::optional<std::string>& group_name() const noexcept { return group_name_; }

  /// Reading as an element of Ar (the zeta function).
  ExponentVector as_exponents() const { return ExponentVector(entries_); }

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
  std::optional<std::int64_t> group_order_;
  std::optional<std::string> group_name_;
};

/// Character-table laws for a degree multiset of a group of the given order:
/// every d_j >= 1 divides |G| and sum d_j^2 = |G|. Empty when all hold.
std::vector<std::string> degree_law_violations(std::span<const std::int64_t> degrees,
                                               std::int64_t group_order);

struct InstanceFlags {
  bool require_dedekind = true;
  bool require_trivial_nonneg = false;

  friend bool operator==(const InstanceFlags&, const InstanceFlags&) = default;
};

struct Instance {
  DegreeVector degrees;
  OrderVector orders;
  InstanceFlags flags;
  std::optional<std::string> s0_label;  // opaque, never parsed

  Instance(DegreeVector d, OrderVector v, InstanceFlags f = {},
           std::optional<std::string> s0 = std::nullopt);

  std::size_t rank() const noexcept { return orders.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct Admissibility {
  bool ok = true;
  std::vector<std::string> reasons;

  friend bool operator==(const Admissibility&, const Admissibility&) = default;
};

/// sum_j k_j v_j
std::int64_t ord(const ExponentVector& k, const OrderVector& v);
bool is_member_hol(const ExponentVector& k, const OrderVector& v);
/// a | b in Ar: b - a in N^r.
bool divides_ar(const ExponentVector& a, const ExponentVector& b);
/// a | b with the quotient in Hol(s0). Both a and b must lie in Hol.
bool divides_hol(const ExponentVector& a, const ExponentVector& b, const OrderVector& v);
Admissibility is_admissible(const Instance& inst);

}  // namespace artin
