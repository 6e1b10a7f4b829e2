#pragma once

// Decision procedures for the holomorphy criteria:
//
//   i    Hol = Ar.
//   ii   Hol factorial, and for every k != l some f in Hol has f_k | f, f_l does not divide f.
//   iii  Hol factorial, and some 1 <= m < r has: every m-subset M admits
//        exponents k_j > 0 (j in M) with prod f_j^{k_j} in Hol.
//   ii'  Hol factorial, and every (r-1)-subset I has prod_{i in I} f_i in Hol.
//
// The witness questions have closed forms; each ships with a bounded-search
// twin used by the tests to validate it. Indices are 0-based throughout the
// library and 1-based on the wire.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "artin/core_model.hpp"
#include "artin/hilbert.hpp"

namespace artin {

/// Strictly increasing, nonempty list of coordinate indices below `rank`.
class SubsetSelector {
 public:
  SubsetSelector(std::vector<std::size_t> indices, std::size_t rank);

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool contains(std::size_t j) const;

  friend bool operator==(const SubsetSelector&, const SubsetSelector&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// All subsets of {0..rank-1} of the given size, in lex order.
std::vector<SubsetSelector> subsets_of_size(std::size_t rank, std::size_t size);

struct PairResult {
  std::size_t k = 0;
  std::size_t l = 0;
  std::optional<ExponentVector> witness;

  friend bool operator==(const PairResult&, const PairResult&) = default;
};

struct CondIIResult {
  bool ok = false;
  std::vector<PairResult> pairs;  // all ordered pairs k != l, lex by (k, l)

  friend bool operator==(const CondIIResult&, const CondIIResult&) = default;
};

struct CondIIIResult {
  bool ok = false;
  std::optional<std::size_t> m;

  friend bool operator==(const CondIIIResult&, const CondIIIResult&) = default;
};

struct CondIIPrimeResult {
  bool ok = false;
  std::optional<SubsetSelector> failing_subset;

  friend bool operator==(const CondIIPrimeResult&, const CondIIPrimeResult&) = default;
};

bool cond_i(const OrderVector& v);

std::optional<ExponentVector> cond_ii_pair(const OrderVector& v, std::size_t k, std::size_t l);
/// Box search over [0, r * max(1, max|v|) + 1]^r.
std::optional<ExponentVector> cond_ii_pair_search(const OrderVector& v, std::size_t k,
                                                  std::size_t l);
CondIIResult cond_ii(const OrderVector& v, const HilbertBasis& basis);

/// Exponents (k_j)_{j in M}, all > 0, with sum k_j v_j >= 0.
std::optional<std::vector<std::int64_t>> cond_iii_subset(const OrderVector& v,
                                                         const SubsetSelector& subset);
/// Box search over [1, r * max(1, max|v|) + 1]^|M|.
std::optional<std::vector<std::int64_t>> cond_iii_subset_search(const OrderVector& v,
                                                                const SubsetSelector& subset);
/// Smallest m in [1, r-1] for which every m-subset passes, from the counts of
/// negative and zero orders alone. nullopt for r = 1.
std::optional<std::size_t> cond_iii_smallest_m_closed_form(const OrderVector& v);
/// Same quantity by enumerating all subsets through cond_iii_subset.
std::optional<std::size_t> cond_iii_smallest_m(const OrderVector& v);
CondIIIResult cond_iii(const OrderVector& v, const HilbertBasis& basis);

CondIIPrimeResult cond_ii_prime(const OrderVector& v, const HilbertBasis& basis);

struct ConditionReport {
  Instance instance;
  Admissibility admissible;
  HilbertBasis basis;
  bool engine_agreement = true;
  bool factorial = false;
  bool cond_i = false;
  CondIIResult cond_ii{};
  CondIIIResult cond_iii{};
  /// Absent for r < 2.
  std::optional<CondIIPrimeResult> cond_ii_prime{};
  /// Present iff admissible and r >= 2.
  std::optional<bool> equivalence_ok{};

  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

/// Runs both Hilbert engines (throws EngineMismatch if they disagree) and
/// every condition.
ConditionReport check_instance(const Instance& inst);

}  // namespace artin
