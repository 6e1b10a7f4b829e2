#pragma once

// Test-only reference computations. These deliberately avoid the library's
// algorithms: the Hilbert basis comes from a sumset sieve, factorizations from
// exhaustive coefficient enumeration.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "artin/core_model.hpp"
#include "artin/hilbert.hpp"

namespace artin::testing {

using Coords = std::vector<std::int64_t>;

inline std::string show(std::span<const std::int64_t> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

inline std::vector<Coords> box_points(std::size_t r, std::int64_t side) {
  std::vector<Coords> out;
  Coords x(r, 0);
  while (true) {
    out.push_back(x);
    std::size_t i = r;
    while (i > 0 && x[i - 1] == side) x[--i] = 0;
    if (i == 0) return out;
    ++x[i - 1];
  }
}

inline bool in_hol(const Coords& k, std::span<const std::int64_t> v) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < k.size(); ++i) total += k[i] * v[i];
  return total >= 0;
}

/// Nonzero Hol points of [0, side]^r minus all pairwise sums of such points.
/// Exact when side bounds the basis coordinates.
inline std::vector<ExponentVector> sieve_hilbert_basis(const OrderVector& v, std::int64_t side) {
  std::vector<Coords> members;
  for (auto& k : box_points(v.size(), side)) {
    bool zero = std::all_of(k.begin(), k.end(), [](auto e) { return e == 0; });
    if (!zero && in_hol(k, v.entries())) members.push_back(k);
  }
  std::set<Coords> sums;
  for (const auto& a : members) {
    for (const auto& b : members) {
      Coords c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
      sums.insert(std::move(c));
    }
  }
  std::vector<ExponentVector> out;
  for (const auto& k : members) {
    if (!sums.count(k)) out.emplace_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Counts every coefficient vector c with sum c_h h = k by full enumeration.
inline std::int64_t enumerate_factorizations(const ExponentVector& k,
                                             const std::vector<ExponentVector>& basis) {
  std::vector<std::int64_t> limit;
  for (const auto& h : basis) {
    std::int64_t most = INT64_MAX;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (h[i] > 0) most = std::min(most, k[i] / h[i]);
    }
    limit.push_back(most);
  }
  std::int64_t count = 0;
  std::vector<std::int64_t> c(basis.size(), 0);
  while (true) {
    Coords sum(k.size(), 0);
    for (std::size_t t = 0; t < basis.size(); ++t) {
      for (std::size_t i = 0; i < k.size(); ++i) sum[i] += c[t] * basis[t][i];
    }
    if (ExponentVector(sum) == k) ++count;
    std::size_t t = basis.size();
    while (t > 0 && c[t - 1] == limit[t - 1]) c[--t] = 0;
    if (t == 0) return count;
    ++c[t - 1];
  }
}

inline OrderVector random_orders(std::mt19937_64& rng, std::size_t r, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  std::vector<std::int64_t> v(r);
  for (auto& e : v) e = dist(rng);
  return OrderVector(std::move(v));
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t r) {
  std::vector<std::size_t> p(r);
  for (std::size_t i = 0; i < r; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// out[perm[i]] = in[i]
inline std::vector<std::int64_t> permuted(std::span<const std::int64_t> in,
                                          const std::vector<std::size_t>& perm) {
  std::vector<std::int64_t> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) out[perm[i]] = in[i];
  return out;
}

inline std::vector<ExponentVector> permuted_basis(const HilbertBasis& basis,
                                                  const std::vector<std::size_t>& perm) {
  std::vector<ExponentVector> out;
  for (const auto& h : basis.elements) out.emplace_back(permuted(h.entries(), perm));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace artin::testing
