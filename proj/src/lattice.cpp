#include "artin/lattice.hpp"

#include <cstdlib>
#include <utility>

#include "artin/checked.hpp"
#include "artin/error.hpp"

namespace artin::lattice {

namespace {

// row[target] -= q * row[source], applied to both the form and the transform.
void subtract_multiple(HermiteForm& h, std::size_t target, std::size_t source, std::int64_t q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < h.form[target].size(); ++c) {
    h.form[target][c] = checked::sub(h.form[target][c], checked::mul(q, h.form[source][c]));
  }
  for (std::size_t c = 0; c < h.transform[target].size(); ++c) {
    h.transform[target][c] =
        checked::sub(h.transform[target][c], checked::mul(q, h.transform[source][c]));
  }
}

void negate_row(HermiteForm& h, std::size_t row) {
  for (auto& e : h.form[row]) e = checked::neg(e);
  for (auto& e : h.transform[row]) e = checked::neg(e);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const Matrix& rows, std::size_t columns) {
  HermiteForm h;
  h.form = rows;
  const std::size_t m = rows.size();
  h.transform.assign(m, Row(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != columns) throw Error(Errc::LengthMismatch, "matrix row width");
    h.transform[i][i] = 1;
  }

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < columns && pivot_row < m; ++col) {
    // Euclid on column `col` among rows pivot_row..m-1 until one nonzero remains.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = pivot_row; i < m; ++i) {
        if (h.form[i][col] == 0) continue;
        if (best == m || std::abs(h.form[i][col]) < std::abs(h.form[best][col])) best = i;
      }
      if (best == m) break;
      std::swap(h.form[pivot_row], h.form[best]);
      std::swap(h.transform[pivot_row], h.transform[best]);
      bool reduced_all = true;
      for (std::size_t i = pivot_row + 1; i < m; ++i) {
        if (h.form[i][col] == 0) continue;
        subtract_multiple(h, i, pivot_row, h.form[i][col] / h.form[pivot_row][col]);
        if (h.form[i][col] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (h.form[pivot_row][col] == 0) continue;
    if (h.form[pivot_row][col] < 0) negate_row(h, pivot_row);
    const std::int64_t pivot = h.form[pivot_row][col];
    for (std::size_t i = 0; i < pivot_row; ++i) {
      subtract_multiple(h, i, pivot_row, floor_div(h.form[i][col], pivot));
    }
    h.pivot_columns.push_back(col);
    ++pivot_row;
  }
  return h;
}

Matrix left_kernel(const Matrix& rows, std::size_t columns) {
  HermiteForm h = hermite_normal_form(rows, columns);
  Matrix kernel;
  for (std::size_t i = h.rank(); i < h.transform.size(); ++i) kernel.push_back(h.transform[i]);
  return kernel;
}

}  // namespace artin::lattice
