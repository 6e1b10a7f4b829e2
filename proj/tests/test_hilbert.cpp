#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "artin/hilbert.hpp"
#include "artin/lattice.hpp"
#include "support/oracles.hpp"

using namespace artin;
using artin::testing::box_points;

namespace {

std::vector<ExponentVector> elems(std::initializer_list<std::initializer_list<std::int64_t>> list) {
  std::vector<ExponentVector> out;
  for (auto e : list) out.emplace_back(e);
  return out;
}

HilbertBasis basis_of(const OrderVector& v) { return hilbert_basis_oracle(v); }

std::vector<OrderVector> full_box(std::size_t r, std::int64_t bound) {
  std::vector<OrderVector> out;
  for (const auto& p : box_points(r, 2 * bound)) {
    std::vector<std::int64_t> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = p[i] - bound;
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace

TEST_CASE("irreducibility") {
  CHECK(is_irreducible({1, 1}, {1, -1}));
  CHECK_FALSE(is_irreducible({2, 1}, {1, -1}));
  CHECK(is_irreducible({3, 2}, {2, -3}));
  try {
    is_irreducible({0, 1}, {1, -1});
    FAIL("expected NotInHol");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInHol);
  }
  try {
    is_irreducible({0, 0}, {1, -1});
    FAIL("expected ZeroElement");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroElement);
  }
}

TEST_CASE("oracle engine known bases") {
  // Frozen from a sumset sieve over [0, 5]^2.
  CHECK(hilbert_basis_oracle({1, 1}).elements == elems({{0, 1}, {1, 0}}));
  CHECK(hilbert_basis_oracle({1, -1}).elements == elems({{1, 0}, {1, 1}}));
  CHECK(hilbert_basis_oracle({2, -3}).elements == elems({{1, 0}, {2, 1}, {3, 2}}));
  CHECK(hilbert_basis_oracle({0, -1}).elements == elems({{1, 0}}));
  CHECK(hilbert_basis_oracle({-1, -2}).elements.empty());
  CHECK(hilbert_basis_oracle({1, -1}).source == HilbertEngine::Oracle);
}

TEST_CASE("frontier engine known bases") {
  CHECK(hilbert_basis_frontier({1, -1}).elements == elems({{1, 0}, {1, 1}}));
  CHECK(hilbert_basis_frontier({1, -1, 0}).elements == elems({{0, 0, 1}, {1, 0, 0}, {1, 1, 0}}));
  CHECK(hilbert_basis_frontier({3, -2}).elements == elems({{1, 0}, {1, 1}, {2, 3}}));
  CHECK(same_elements(hilbert_basis_frontier({3, -2}), hilbert_basis_oracle({3, -2})));
  CHECK(hilbert_basis_frontier({0, 0, 0}).elements == elems({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  CHECK(hilbert_basis_frontier({-3}).elements.empty());
  CHECK(hilbert_basis_frontier({1, -1}).source == HilbertEngine::Frontier);
}

TEST_CASE("engines agree with each other and with the sieve") {
  for (std::size_t r : {1u, 2u, 3u}) {
    const std::int64_t bound = r == 3 ? 2 : 3;
    for (const auto& v : full_box(r, bound)) {
      const std::string shown = testing::show(v.entries());
      CAPTURE(shown);
      auto oracle = hilbert_basis_oracle(v);
      auto frontier = hilbert_basis_frontier(v);
      CHECK(oracle.elements == frontier.elements);
      // The sieve box is wider than the coordinate bound.
      CHECK(oracle.elements == testing::sieve_hilbert_basis(v, v.box_bound() + 1));
    }
  }
}

TEST_CASE("basis invariants") {
  for (const auto& v : full_box(3, 2)) {
    auto basis = basis_of(v);
    CHECK(std::is_sorted(basis.elements.begin(), basis.elements.end()));
    CHECK(std::adjacent_find(basis.elements.begin(), basis.elements.end()) ==
          basis.elements.end());
    for (const auto& h : basis.elements) {
      CHECK_FALSE(h.is_zero());
      CHECK(is_member_hol(h, v));
      CHECK(is_irreducible(h, v));
      for (std::size_t i = 0; i < h.size(); ++i) CHECK(h[i] <= v.box_bound());
      for (const auto& g : basis.elements) {
        if (g != h) CHECK_FALSE(divides_hol(g, h, v));
      }
    }
    // e_j is irreducible exactly when f_j is holomorphic.
    for (std::size_t j = 0; j < v.size(); ++j) {
      CHECK(basis.contains(ExponentVector::unit(v.size(), j)) == (v[j] >= 0));
    }
  }
}

TEST_CASE("every Hol element of [0,3]^r factors") {
  for (const auto& v : full_box(2, 3)) {
    auto basis = basis_of(v);
    for (const auto& k : box_points(2, 3)) {
      ExponentVector e(k);
      if (!is_member_hol(e, v)) continue;
      CHECK(count_factorizations(e, basis, 2).count >= 1);
    }
  }
}

TEST_CASE("factorization counts") {
  auto b1 = basis_of({1, -1});
  auto c1 = count_factorizations({3, 2}, b1, 2);
  CHECK(c1.count == 1);
  REQUIRE(c1.witnesses.size() == 1);
  CHECK(c1.witnesses[0] == std::vector<std::int64_t>{1, 2});

  auto b2 = basis_of({2, -3});
  auto c2 = count_factorizations({4, 2}, b2, 2);
  CHECK(c2.count == 2);
  REQUIRE(c2.witnesses.size() == 2);
  for (const auto& w : c2.witnesses) {
    ExponentVector sum = ExponentVector::zero(2);
    for (std::size_t t = 0; t < w.size(); ++t) sum = sum + b2.elements[t].scaled(w[t]);
    CHECK(sum == ExponentVector{4, 2});
  }
  CHECK(c2.witnesses[0] != c2.witnesses[1]);

  CHECK(count_factorizations({0, 0}, b2, 2).count == 1);
  CHECK_THROWS_AS(count_factorizations({0, 1}, b2, 2), Error);
}

TEST_CASE("factorization counts match exhaustive enumeration") {
  for (const auto& v : full_box(2, 2)) {
    auto basis = basis_of(v);
    for (const auto& k : box_points(2, 4)) {
      ExponentVector e(k);
      if (!is_member_hol(e, v)) continue;
      const std::int64_t exact = testing::enumerate_factorizations(e, basis.elements);
      CHECK(count_factorizations(e, basis, 1000).count == exact);
      CHECK(count_factorizations(e, basis, 2).count == std::min<std::int64_t>(exact, 2));
    }
  }
}

TEST_CASE("lattice rank") {
  CHECK(lattice_is_full(HilbertBasis{{1, -1}, elems({{1, 0}, {1, 1}})}, 2));
  CHECK_FALSE(lattice_is_full(HilbertBasis{{0, -1}, elems({{1, 0}})}, 2));
  CHECK(lattice_is_full(HilbertBasis{{2, -3}, elems({{1, 0}, {2, 1}, {3, 2}})}, 2));
  // Full rank but index 2.
  CHECK_FALSE(lattice_is_full(HilbertBasis{{1, 1}, elems({{2, 0}, {0, 1}})}, 2));
  CHECK_FALSE(lattice_is_full(HilbertBasis{{1, 1}, {}}, 2));
}

TEST_CASE("hermite form is exact") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 5;
    const std::size_t cols = 1 + (trial / 5) % 4;
    lattice::Matrix a(rows, lattice::Row(cols));
    for (auto& row : a) {
      for (auto& e : row) e = entry(rng);
    }
    auto h = lattice::hermite_normal_form(a, cols);
    // U * A == H
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t c = 0; c < cols; ++c) {
        std::int64_t sum = 0;
        for (std::size_t t = 0; t < rows; ++t) sum += h.transform[i][t] * a[t][c];
        CHECK(sum == h.form[i][c]);
      }
    }
    // Echelon shape with positive pivots and zero rows at the bottom.
    for (std::size_t i = 0; i < h.rank(); ++i) {
      const std::size_t p = h.pivot_columns[i];
      CHECK(h.form[i][p] > 0);
      for (std::size_t c = 0; c < p; ++c) CHECK(h.form[i][c] == 0);
      for (std::size_t above = 0; above < i; ++above) {
        CHECK(h.form[above][p] >= 0);
        CHECK(h.form[above][p] < h.form[i][p]);
      }
    }
    for (std::size_t i = h.rank(); i < rows; ++i) {
      for (auto e : h.form[i]) CHECK(e == 0);
    }
    for (const auto& lambda : lattice::left_kernel(a, cols)) {
      for (std::size_t c = 0; c < cols; ++c) {
        std::int64_t sum = 0;
        for (std::size_t t = 0; t < rows; ++t) sum += lambda[t] * a[t][c];
        CHECK(sum == 0);
      }
    }
  }
}

TEST_CASE("factoriality") {
  CHECK(is_factorial(basis_of({1, -1}), 2));
  CHECK_FALSE(is_factorial(basis_of({2, -3}), 2));
  CHECK(is_factorial(basis_of({0, 0, 0}), 3));
}

TEST_CASE("nonuniqueness witness") {
  auto w = nonuniqueness_witness(basis_of({2, -3}), 2);
  REQUIRE(w.has_value());
  CHECK(*w == ExponentVector{4, 2});
  CHECK(count_factorizations(*w, basis_of({2, -3}), 2).count == 2);

  CHECK_FALSE(nonuniqueness_witness(basis_of({1, -1}), 2).has_value());

  // Hilb(1,1,-1) = {(0,1,0),(0,1,1),(1,0,0),(1,0,1)}; its single relation
  // balances at (1,1,1).
  auto b3 = basis_of({1, 1, -1});
  CHECK(b3.elements == elems({{0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}}));
  auto w3 = nonuniqueness_witness(b3, 3);
  REQUIRE(w3.has_value());
  CHECK(*w3 == ExponentVector{1, 1, 1});
  CHECK(count_factorizations(*w3, b3, 2).count == 2);
}

TEST_CASE("adjoined irreducibles") {
  CHECK(adjoined_irreducibles({1, -1}, 0) == elems({{1, 0}, {1, 1}}));
  CHECK(adjoined_irreducibles({2, -3}, 0) == elems({{1, 0}, {2, 1}}));
  CHECK(adjoined_irreducibles({1, 0, -2}, 0) == elems({{1, 0, 0}, {0, 1, 0}, {2, 0, 1}}));
  try {
    adjoined_irreducibles({0, 1}, 0);
    FAIL("expected NonpositivePivot");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonpositivePivot);
  }
}

TEST_CASE("adjoined set equals the basis when factorial") {
  for (const auto& v : full_box(3, 2)) {
    auto basis = basis_of(v);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] <= 0) continue;
      auto adjoined = adjoined_irreducibles(v, k);
      for (const auto& a : adjoined) CHECK(basis.contains(a));
      if (is_factorial(basis, v.size())) {
        std::sort(adjoined.begin(), adjoined.end());
        CHECK(adjoined == basis.elements);
      }
    }
  }
}

TEST_CASE("scaling and permutation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 2 + trial % 3;
    OrderVector v = testing::random_orders(rng, r, 2);
    auto basis = basis_of(v);
    for (std::int64_t c : {2, 3}) {
      std::vector<std::int64_t> scaled(v.entries().begin(), v.entries().end());
      for (auto& e : scaled) e *= c;
      CHECK(hilbert_basis_frontier(OrderVector(scaled)).elements == basis.elements);
    }
    auto perm = testing::random_permutation(rng, r);
    auto moved = basis_of(OrderVector(testing::permuted(v.entries(), perm)));
    CHECK(moved.elements == testing::permuted_basis(basis, perm));
  }
}

TEST_CASE("oracle refuses oversized boxes") {
  try {
    hilbert_basis_oracle({1000, -1000, 1000});
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
}
