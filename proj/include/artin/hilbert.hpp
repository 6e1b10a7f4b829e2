#pragma once

// Hilbert basis of Hol(s0) = { k in N^r : <k, v> >= 0 }.
//
// Hol is isomorphic to the solution monoid of the homogeneous equation
// <k, v> - s = 0 over N^{r+1} via k -> (k, <k, v>), so its irreducibles are the
// componentwise-minimal nonzero solutions with the slack dropped. Classical
// bounds on minimal solutions of one linear equation put every coordinate of an
// irreducible at or below max(1, max_j |v_j|); the oracle engine enumerates
// that box. The frontier engine runs a completion search on the slack
// equation and never uses the bound, so the two cross-check each other.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "artin/core_model.hpp"

namespace artin {

enum class HilbertEngine { Oracle, Frontier };

std::string_view to_string(HilbertEngine engine) noexcept;

struct HilbertBasis {
  OrderVector orders;
  std::vector<ExponentVector> elements;  // lex-sorted, duplicate-free
  HilbertEngine source = HilbertEngine::Oracle;

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t rank() const noexcept { return orders.size(); }
  bool contains(const ExponentVector& k) const;

  friend bool operator==(const HilbertBasis&, const HilbertBasis&) = default;
};

/// Same element set; engine tags are ignored.
bool same_elements(const HilbertBasis& a, const HilbertBasis& b);

struct FactorizationCount {
  ExponentVector element;
  std::int64_t count = 0;  // min(true count, cap)
  /// Up to two coefficient vectors c with sum_h c_h * h = element, indexed
  /// like HilbertBasis::elements.
  std::vector<std::vector<std::int64_t>> witnesses;
};

/// Largest box the oracle will enumerate, in lattice points.
inline constexpr std::int64_t kOracleBoxCap = std::int64_t{1} << 26;

bool is_irreducible(const ExponentVector& k, const OrderVector& v);
HilbertBasis hilbert_basis_oracle(const OrderVector& v);
HilbertBasis hilbert_basis_frontier(const OrderVector& v);

/// Number of ways to write k over the basis, stopping once `cap` is reached.
FactorizationCount count_factorizations(const ExponentVector& k, const HilbertBasis& basis,
                                        std::int64_t cap = 2);

/// True iff the basis spans Z^r as a group.
bool lattice_is_full(const HilbertBasis& basis, std::size_t r);
bool is_factorial(const HilbertBasis& basis, std::size_t r);

/// For |basis| > r: an element with two distinct factorizations, built from an
/// integer relation among the basis elements. nullopt when |basis| <= r.
std::optional<ExponentVector> nonuniqueness_witness(const HilbertBasis& basis, std::size_t r);

/// The r elements f_k^{m_j} f_j, m_j = min{m >= 0 : <m e_k + e_j, v> >= 0},
/// for a pivot k with v_k > 0. `pivot` is 0-based.
std::vector<ExponentVector> adjoined_irreducibles(const OrderVector& v, std::size_t pivot);

}  // namespace artin
