#pragma once

#include <complex>
#include <vector>

#include "saa/common.hpp"

namespace saa {

/// Dense complex matrix, row-major.
struct Cmat {
  int rows = 0;
  int cols = 0;
  std::vector<cdbl> data;

  Cmat() = default;
  Cmat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

  cdbl& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  const cdbl& at(int r, int c) const {
    return data[static_cast<size_t>(r) * cols + c];
  }

  Cmat column(int c) const {
    Cmat v(rows, 1);
    for (int r = 0; r < rows; ++r) v.at(r, 0) = at(r, c);
    return v;
  }
};

inline double frobenius_norm(const Cmat& m) {
  double s = 0.0;
  for (const cdbl& v : m.data) s += std::norm(v);
  return std::sqrt(s);
}

inline bool is_hermitian(const Cmat& m, double tol) {
  if (m.rows != m.cols) return false;
  double scale = frobenius_norm(m);
  if (scale == 0.0) return true;
  for (int r = 0; r < m.rows; ++r)
    for (int c = r; c < m.cols; ++c)
      if (std::abs(m.at(r, c) - std::conj(m.at(c, r))) > tol * scale)
        return false;
  return true;
}

}  // namespace saa
