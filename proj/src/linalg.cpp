#include "unitary/linalg.hpp"

#include <stdexcept>

namespace unitary {

namespace {

// Incrementally maintained reduced row echelon form. Each stored row is
// normalized to a leading 1 and fully back-substituted, so feeding a new
// row is a single reduction pass against at most ncols pivots.
class Reducer {
 public:
  explicit Reducer(std::size_t ncols) : ncols_(ncols) {}

  // Reduces row (of length ncols_ + extra trailing entries, which are
  // carried along) against the current pivots. Returns the residual row.
  std::vector<Coeff> reduce(std::vector<Coeff> row) const {
    for (std::size_t p = 0; p < pivot_col_.size(); ++p) {
      // Copy: the reduction zeroes row[pivot_col_[p]] mid-loop.
      const Coeff c = row[pivot_col_[p]];
      if (c.is_zero()) continue;
      const auto& pivot = rows_[p];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (!pivot[j].is_zero()) row[j] -= c * pivot[j];
      }
    }
    return row;
  }

  // Inserts a reduced row if it has a nonzero entry among the first
  // ncols_ columns; returns false if the row contributed nothing there.
  bool insert(std::vector<Coeff> row) {
    std::size_t lead = ncols_;
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (!row[j].is_zero()) {
        lead = j;
        break;
      }
    }
    if (lead == ncols_) return false;
    Coeff inv = row[lead].inverse();
    for (auto& v : row) {
      if (!v.is_zero()) v = v * inv;
    }
    // Back-eliminate the new pivot from existing rows.
    for (auto& r : rows_) {
      const Coeff c = r[lead];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (!row[j].is_zero()) r[j] -= c * row[j];
      }
    }
    pivot_col_.push_back(lead);
    rows_.push_back(std::move(row));
    return true;
  }

  const std::vector<std::size_t>& pivot_cols() const { return pivot_col_; }
  const std::vector<std::vector<Coeff>>& rows() const { return rows_; }

 private:
  std::size_t ncols_;
  std::vector<std::size_t> pivot_col_;
  std::vector<std::vector<Coeff>> rows_;
};

std::vector<std::vector<Coeff>> nullspace_from(const Reducer& red,
                                               std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : red.pivot_cols()) is_pivot[c] = true;

  std::vector<std::vector<Coeff>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(ncols, Coeff());
    v[free] = Coeff(1);
    for (std::size_t p = 0; p < red.pivot_cols().size(); ++p) {
      v[red.pivot_cols()[p]] = -red.rows()[p][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

LinearSolution solve_linear(const std::vector<std::vector<Coeff>>& rows,
                            const std::vector<Coeff>& rhs, std::size_t ncols) {
  if (rows.size() != rhs.size()) {
    throw std::invalid_argument("solve_linear: rows/rhs size mismatch");
  }
  Reducer red(ncols);
  bool inconsistent = false;
  for (std::size_t i = 0; i < rows.size() && !inconsistent; ++i) {
    if (rows[i].size() != ncols) {
      throw std::invalid_argument("solve_linear: row width mismatch");
    }
    std::vector<Coeff> aug = rows[i];
    aug.push_back(rhs[i]);
    aug = red.reduce(std::move(aug));
    if (!red.insert(std::move(aug))) {
      // Row vanished on the unknowns; a leftover rhs is a contradiction.
      // insert() dropped the row, so re-reduce to inspect the residual.
      std::vector<Coeff> again = rows[i];
      again.push_back(rhs[i]);
      again = red.reduce(std::move(again));
      if (!again[ncols].is_zero()) inconsistent = true;
    }
  }

  LinearSolution sol;
  if (inconsistent) return sol;
  sol.consistent = true;
  sol.particular.assign(ncols, Coeff());
  for (std::size_t p = 0; p < red.pivot_cols().size(); ++p) {
    sol.particular[red.pivot_cols()[p]] = red.rows()[p][ncols];
  }
  sol.nullspace = nullspace_from(red, ncols);
  return sol;
}

std::vector<std::vector<Coeff>> kernel_basis(
    const std::vector<std::vector<Coeff>>& rows, std::size_t ncols) {
  Reducer red(ncols);
  for (const auto& r : rows) {
    if (r.size() != ncols) {
      throw std::invalid_argument("kernel_basis: row width mismatch");
    }
    red.insert(red.reduce(r));
  }
  return nullspace_from(red, ncols);
}

}  // namespace unitary
