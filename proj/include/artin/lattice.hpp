#pragma once

// Exact integer row reduction. Used for the rank-r lattice check and for
// extracting integer relations among Hilbert-basis elements.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace artin::lattice {

using Row = std::vector<std::int64_t>;
using Matrix = std::vector<Row>;

struct HermiteForm {
  /// Row-style Hermite normal form of the input: nonzero rows first, pivots
  /// positive and strictly increasing in column, entries above a pivot reduced
  /// into [0, pivot).
  Matrix form;
  /// Unimodular U with U * input = form.
  Matrix transform;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Rows must all have `columns` entries. Euclidean reduction in checked int64.
HermiteForm hermite_normal_form(const Matrix& rows, std::size_t columns);

/// Integer vectors lambda with lambda * rows = 0, one per zero row of the
/// Hermite form; together they span the left kernel.
Matrix left_kernel(const Matrix& rows, std::size_t columns);

}  // namespace artin::lattice
