#include "artin/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "artin/checked.hpp"
#include "artin/lattice.hpp"

namespace artin {

namespace {

using Coords = std::vector<std::int64_t>;

// Advances `x` through the box [0, upper] in lex order (last coordinate
// fastest). Returns false after the last point.
bool next_in_box(Coords& x, std::span<const std::int64_t> upper) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] < upper[i]) {
      ++x[i];
      return true;
    }
    x[i] = 0;
  }
  return false;
}

std::int64_t dot(const Coords& x, const Coords& a) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) total = checked::add(total, checked::mul(x[i], a[i]));
  return total;
}

bool dominates(const Coords& big, const Coords& small) {
  for (std::size_t i = 0; i < big.size(); ++i) {
    if (big[i] < small[i]) return false;
  }
  return true;
}

std::int64_t box_points(std::size_t r, std::int64_t side) {
  std::int64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    total = checked::mul(total, checked::add(side, 1));
    if (total > kOracleBoxCap) {
      throw Error(Errc::CapExceeded, "oracle box exceeds " + std::to_string(kOracleBoxCap) +
                                         " points");
    }
  }
  return total;
}

void require_member(const ExponentVector& k, const OrderVector& v) {
  if (!is_member_hol(k, v)) throw Error(Errc::NotInHol, "element is not in Hol");
}

// Every Hol point of [0,B]^r must be a sum of basis elements. Dynamic
// programming over the box in lex order, which refines the componentwise order.
void assert_generates_box(const HilbertBasis& basis, std::int64_t side) {
  const std::size_t r = basis.rank();
  const std::int64_t total = box_points(r, side);
  const std::int64_t stride_base = side + 1;
  std::vector<char> generated(static_cast<std::size_t>(total), 0);
  Coords x(r, 0);
  Coords upper(r, side);
  std::int64_t index = 0;
  do {
    ExponentVector k(x);
    if (k.is_zero()) {
      generated[0] = 1;
    } else if (is_member_hol(k, basis.orders)) {
      for (const auto& h : basis.elements) {
        auto rest = k.minus(h);
        if (!rest || !is_member_hol(*rest, basis.orders)) continue;
        std::int64_t rest_index = 0;
        for (std::size_t i = 0; i < r; ++i) rest_index = rest_index * stride_base + (*rest)[i];
        if (generated[static_cast<std::size_t>(rest_index)]) {
          generated[static_cast<std::size_t>(index)] = 1;
          break;
        }
      }
      if (!generated[static_cast<std::size_t>(index)]) {
        throw std::logic_error("oracle basis fails to generate a Hol element of the box");
      }
    }
    ++index;
  } while (next_in_box(x, upper));
}

}  // namespace

std::string_view to_string(HilbertEngine engine) noexcept {
  return engine == HilbertEngine::Oracle ? "oracle" : "frontier";
}

bool HilbertBasis::contains(const ExponentVector& k) const {
  return std::binary_search(elements.begin(), elements.end(), k);
}

bool same_elements(const HilbertBasis& a, const HilbertBasis& b) {
  return a.orders == b.orders && a.elements == b.elements;
}

bool is_irreducible(const ExponentVector& k, const OrderVector& v) {
  require_member(k, v);
  if (k.is_zero()) throw Error(Errc::ZeroElement, "zero is a unit, not an irreducible");
  const Coords orders(v.entries().begin(), v.entries().end());
  const Coords whole(k.entries().begin(), k.entries().end());
  const std::int64_t whole_ord = dot(whole, orders);
  Coords a(k.size(), 0);
  while (next_in_box(a, k.entries())) {
    if (a == whole) continue;
    const std::int64_t part_ord = dot(a, orders);
    if (part_ord >= 0 && whole_ord - part_ord >= 0) return false;
  }
  return true;
}

HilbertBasis hilbert_basis_oracle(const OrderVector& v) {
  HilbertBasis out{v, {}, HilbertEngine::Oracle};
  const std::size_t r = v.size();
  if (r == 0) throw Error(Errc::InvalidValue, "rank must be >= 1");
  const std::int64_t side = v.box_bound();
  box_points(r, side);
  Coords x(r, 0);
  Coords upper(r, side);
  while (next_in_box(x, upper)) {
    ExponentVector k(x);
    if (is_member_hol(k, v) && is_irreducible(k, v)) out.elements.push_back(std::move(k));
  }
  assert_generates_box(out, side);
  return out;
}

HilbertBasis hilbert_basis_frontier(const OrderVector& v) {
  HilbertBasis out{v, {}, HilbertEngine::Frontier};
  const std::size_t r = v.size();
  if (r == 0) throw Error(Errc::InvalidValue, "rank must be >= 1");

  std::vector<std::size_t> active;  // coordinates with v_j != 0
  for (std::size_t j = 0; j < r; ++j) {
    if (v[j] == 0) {
      out.elements.push_back(ExponentVector::unit(r, j));
    } else {
      active.push_back(j);
    }
  }

  // Slack equation sum_{j active} v_j x_j - s = 0; the slack is the last slot.
  Coords coeff;
  for (auto j : active) coeff.push_back(v[j]);
  coeff.push_back(-1);
  const std::size_t n = coeff.size();

  std::vector<Coords> minimal;
  std::set<Coords> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    frontier.insert(std::move(e));
  }

  // Level by level in total degree, so a solution found at a level can only be
  // dominated by solutions from earlier levels, which already pruned it.
  while (!frontier.empty()) {
    std::set<Coords> next;
    std::vector<Coords> found;
    for (const auto& x : frontier) {
      if (dot(x, coeff) == 0) found.push_back(x);
    }
    minimal.insert(minimal.end(), found.begin(), found.end());
    for (const auto& x : frontier) {
      const std::int64_t value = dot(x, coeff);
      if (value == 0) continue;
      // Only steps that move the value toward zero.
      for (std::size_t i = 0; i < n; ++i) {
        if ((value > 0) == (coeff[i] > 0)) continue;
        Coords y = x;
        y[i] = checked::add(y[i], 1);
        bool pruned = std::any_of(minimal.begin(), minimal.end(),
                                  [&](const Coords& m) { return dominates(y, m); });
        if (!pruned) next.insert(std::move(y));
      }
    }
    frontier = std::move(next);
  }

  for (const auto& solution : minimal) {
    Coords k(r, 0);
    for (std::size_t t = 0; t < active.size(); ++t) k[active[t]] = solution[t];
    out.elements.emplace_back(std::move(k));
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
  return out;
}

FactorizationCount count_factorizations(const ExponentVector& k, const HilbertBasis& basis,
                                        std::int64_t cap) {
  require_member(k, basis.orders);
  if (cap < 1) throw Error(Errc::InvalidValue, "factorization cap must be >= 1");

  FactorizationCount out{k, 0, {}};
  const auto& elems = basis.elements;
  std::vector<std::int64_t> coeffs(elems.size(), 0);

  std::function<void(std::size_t, const ExponentVector&)> search =
      [&](std::size_t idx, const ExponentVector& rest) {
        if (out.count >= cap) return;
        if (rest.is_zero()) {
          ++out.count;
          if (out.witnesses.size() < 2) out.witnesses.push_back(coeffs);
          return;
        }
        if (idx == elems.size() || !is_member_hol(rest, basis.orders)) return;
        // Take as many copies of elems[idx] as possible first, then fewer.
        std::vector<ExponentVector> remainders{rest};
        while (auto smaller = remainders.back().minus(elems[idx])) {
          remainders.push_back(std::move(*smaller));
        }
        for (std::size_t c = remainders.size(); c-- > 0;) {
          coeffs[idx] = static_cast<std::int64_t>(c);
          search(idx + 1, remainders[c]);
          if (out.count >= cap) break;
        }
        coeffs[idx] = 0;
      };
  search(0, k);
  return out;
}

bool lattice_is_full(const HilbertBasis& basis, std::size_t r) {
  if (basis.elements.empty()) return false;
  lattice::Matrix rows;
  for (const auto& h : basis.elements) {
    if (h.size() != r) throw Error(Errc::LengthMismatch, "basis element rank");
    rows.emplace_back(h.entries().begin(), h.entries().end());
  }
  auto form = lattice::hermite_normal_form(rows, r);
  if (form.rank() != r) return false;
  for (std::size_t i = 0; i < r; ++i) {
    if (form.form[i][form.pivot_columns[i]] != 1) return false;
  }
  return true;
}

bool is_factorial(const HilbertBasis& basis, std::size_t r) { return basis.size() == r; }

std::optional<ExponentVector> nonuniqueness_witness(const HilbertBasis& basis, std::size_t r) {
  if (basis.size() <= r) return std::nullopt;
  lattice::Matrix rows;
  for (const auto& h : basis.elements) rows.emplace_back(h.entries().begin(), h.entries().end());
  auto kernel = lattice::left_kernel(rows, r);
  if (kernel.empty()) throw Error(Errc::NoRelation, "no integer relation among basis elements");

  const auto& relation = kernel.front();
  Coords positive(r, 0);
  Coords negative(r, 0);
  for (std::size_t i = 0; i < relation.size(); ++i) {
    Coords& side = relation[i] > 0 ? positive : negative;
    const std::int64_t weight = relation[i] > 0 ? relation[i] : checked::neg(relation[i]);
    for (std::size_t c = 0; c < r; ++c) {
      side[c] = checked::add(side[c], checked::mul(weight, basis.elements[i][c]));
    }
  }
  if (positive != negative) throw std::logic_error("kernel relation does not balance");
  return ExponentVector(std::move(positive));
}

std::vector<ExponentVector> adjoined_irreducibles(const OrderVector& v, std::size_t pivot) {
  if (pivot >= v.size()) throw Error(Errc::IndexOutOfRange, "pivot index");
  if (v[pivot] <= 0) throw Error(Errc::NonpositivePivot, "pivot order must be positive");
  const std::size_t r = v.size();
  std::vector<ExponentVector> out;
  for (std::size_t j = 0; j < r; ++j) {
    const std::int64_t m = std::max<std::int64_t>(0, checked::ceil_div(checked::neg(v[j]), v[pivot]));
    Coords k(r, 0);
    k[j] = 1;
    k[pivot] = checked::add(k[pivot], m);
    ExponentVector element(std::move(k));
    if (!is_member_hol(element, v) || !is_irreducible(element, v)) {
      throw std::logic_error("adjoined element is not an irreducible of Hol");
    }
    out.push_back(std::move(element));
  }
  return out;
}

}  // namespace artin
