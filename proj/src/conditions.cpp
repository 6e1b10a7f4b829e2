#include "artin/conditions.hpp"

#include <algorithm>

#include "artin/checked.hpp"

namespace artin {

namespace {

void require_index(std::size_t j, std::size_t r) {
  if (j >= r) {
    throw Error(Errc::IndexOutOfRange,
                "index " + std::to_string(j) + " outside rank " + std::to_string(r));
  }
}

std::int64_t search_side(const OrderVector& v) {
  return checked::add(checked::mul(static_cast<std::int64_t>(v.size()), v.box_bound()), 1);
}

// Lex-order odometer over [lower, upper]^n. Returns false after the last point.
bool advance(std::vector<std::int64_t>& x, std::int64_t lower, std::int64_t upper) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] < upper) {
      ++x[i];
      return true;
    }
    x[i] = lower;
  }
  return false;
}

}  // namespace

SubsetSelector::SubsetSelector(std::vector<std::size_t> indices, std::size_t rank)
    : indices_(std::move(indices)) {
  if (indices_.empty()) throw Error(Errc::InvalidSubset, "subset must be nonempty");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] >= rank) throw Error(Errc::InvalidSubset, "subset index out of range");
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw Error(Errc::InvalidSubset, "subset indices must be strictly increasing");
    }
  }
}

bool SubsetSelector::contains(std::size_t j) const {
  return std::binary_search(indices_.begin(), indices_.end(), j);
}

std::vector<SubsetSelector> subsets_of_size(std::size_t rank, std::size_t size) {
  std::vector<SubsetSelector> out;
  if (size == 0 || size > rank) return out;
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    out.emplace_back(pick, rank);
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == rank - size + i - 1) --i;
    if (i == 0) return out;
    ++pick[i - 1];
    for (std::size_t t = i; t < size; ++t) pick[t] = pick[t - 1] + 1;
  }
}

bool cond_i(const OrderVector& v) {
  return std::all_of(v.entries().begin(), v.entries().end(), [](auto e) { return e >= 0; });
}

std::optional<ExponentVector> cond_ii_pair(const OrderVector& v, std::size_t k, std::size_t l) {
  const std::size_t r = v.size();
  require_index(k, r);
  require_index(l, r);
  if (k == l) throw Error(Errc::EqualIndices, "pair indices must differ");

  if (v[k] >= 0) return ExponentVector::unit(r, k);
  for (std::size_t p = 0; p < r; ++p) {
    if (p == l || v[p] <= 0) continue;
    std::vector<std::int64_t> a(r, 0);
    a[k] = 1;
    a[p] = checked::ceil_div(checked::neg(v[k]), v[p]);
    return ExponentVector(std::move(a));
  }
  return std::nullopt;
}

std::optional<ExponentVector> cond_ii_pair_search(const OrderVector& v, std::size_t k,
                                                  std::size_t l) {
  const std::size_t r = v.size();
  require_index(k, r);
  require_index(l, r);
  if (k == l) throw Error(Errc::EqualIndices, "pair indices must differ");

  const std::int64_t side = search_side(v);
  std::vector<std::int64_t> a(r, 0);
  do {
    if (a[k] < 1 || a[l] != 0) continue;
    ExponentVector candidate(a);
    if (is_member_hol(candidate, v)) return candidate;
  } while (advance(a, 0, side));
  return std::nullopt;
}

CondIIResult cond_ii(const OrderVector& v, const HilbertBasis& basis) {
  const std::size_t r = v.size();
  CondIIResult out;
  bool all_pairs = true;
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = 0; l < r; ++l) {
      if (k == l) continue;
      auto witness = cond_ii_pair(v, k, l);
      all_pairs = all_pairs && witness.has_value();
      out.pairs.push_back({k, l, std::move(witness)});
    }
  }
  out.ok = is_factorial(basis, r) && all_pairs;
  return out;
}

std::optional<std::vector<std::int64_t>> cond_iii_subset(const OrderVector& v,
                                                         const SubsetSelector& subset) {
  const auto& idx = subset.indices();
  if (idx.back() >= v.size()) throw Error(Errc::InvalidSubset, "subset index out of range");

  std::vector<std::int64_t> exponents(idx.size(), 1);
  auto pivot = std::find_if(idx.begin(), idx.end(), [&](std::size_t j) { return v[j] > 0; });
  if (pivot == idx.end()) {
    bool all_zero = std::all_of(idx.begin(), idx.end(), [&](std::size_t j) { return v[j] == 0; });
    if (all_zero) return exponents;
    return std::nullopt;
  }
  std::int64_t deficit = 0;
  for (auto j : idx) {
    if (j != *pivot && v[j] < 0) deficit = checked::add(deficit, checked::neg(v[j]));
  }
  const auto pos = static_cast<std::size_t>(pivot - idx.begin());
  exponents[pos] = std::max<std::int64_t>(1, checked::ceil_div(deficit, v[*pivot]));
  return exponents;
}

std::optional<std::vector<std::int64_t>> cond_iii_subset_search(const OrderVector& v,
                                                                const SubsetSelector& subset) {
  const auto& idx = subset.indices();
  if (idx.back() >= v.size()) throw Error(Errc::InvalidSubset, "subset index out of range");

  const std::int64_t side = search_side(v);
  std::vector<std::int64_t> exponents(idx.size(), 1);
  do {
    std::int64_t total = 0;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      total = checked::add(total, checked::mul(exponents[t], v[idx[t]]));
    }
    if (total >= 0) return exponents;
  } while (advance(exponents, 1, side));
  return std::nullopt;
}

std::optional<std::size_t> cond_iii_smallest_m_closed_form(const OrderVector& v) {
  const std::size_t r = v.size();
  if (r < 2) return std::nullopt;
  std::size_t negatives = 0;
  std::size_t zeros = 0;
  for (auto e : v.entries()) {
    if (e < 0) ++negatives;
    if (e == 0) ++zeros;
  }
  // An m-subset fails exactly when it has no positive order and at least one
  // negative one, which is possible iff negatives >= 1 and m <= negatives + zeros.
  if (negatives == 0) return 1;
  const std::size_t m = negatives + zeros + 1;
  if (m <= r - 1) return m;
  return std::nullopt;
}

std::optional<std::size_t> cond_iii_smallest_m(const OrderVector& v) {
  const std::size_t r = v.size();
  for (std::size_t m = 1; m < r; ++m) {
    auto subsets = subsets_of_size(r, m);
    bool every = std::all_of(subsets.begin(), subsets.end(), [&](const SubsetSelector& s) {
      return cond_iii_subset(v, s).has_value();
    });
    if (every) return m;
  }
  return std::nullopt;
}

CondIIIResult cond_iii(const OrderVector& v, const HilbertBasis& basis) {
  CondIIIResult out;
  if (!is_factorial(basis, v.size())) return out;
  out.m = cond_iii_smallest_m(v);
  out.ok = out.m.has_value();
  return out;
}

CondIIPrimeResult cond_ii_prime(const OrderVector& v, const HilbertBasis& basis) {
  const std::size_t r = v.size();
  if (r < 2) throw Error(Errc::RankTooSmall, "ii' needs rank >= 2");
  CondIIPrimeResult out;
  for (auto& subset : subsets_of_size(r, r - 1)) {
    std::int64_t total = 0;
    for (auto i : subset.indices()) total = checked::add(total, v[i]);
    if (total < 0) {
      out.failing_subset = std::move(subset);
      break;
    }
  }
  out.ok = is_factorial(basis, r) && !out.failing_subset.has_value();
  return out;
}

ConditionReport check_instance(const Instance& inst) {
  const OrderVector& v = inst.orders;
  const std::size_t r = inst.rank();

  HilbertBasis oracle = hilbert_basis_oracle(v);
  HilbertBasis frontier = hilbert_basis_frontier(v);
  if (!same_elements(oracle, frontier)) {
    throw Error(Errc::EngineMismatch, "oracle and frontier Hilbert bases differ");
  }

  ConditionReport report{
      .instance = inst, .admissible = is_admissible(inst), .basis = std::move(oracle)};
  report.engine_agreement = true;
  report.factorial = is_factorial(report.basis, r);
  report.cond_i = cond_i(v);
  report.cond_ii = cond_ii(v, report.basis);
  report.cond_iii = cond_iii(v, report.basis);
  if (r >= 2) report.cond_ii_prime = cond_ii_prime(v, report.basis);
  if (report.admissible.ok && r >= 2) {
    const bool i = report.cond_i;
    report.equivalence_ok = (i == report.cond_ii.ok) && (i == report.cond_iii.ok) &&
                            (i == report.cond_ii_prime->ok);
  }
  return report;
}

}  // namespace artin
