#include "xxchain/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace xxchain {

double lu_determinant(std::vector<double> a, int n) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("lu_determinant: buffer is not n x n");
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a[static_cast<std::size_t>(col) * n + col]);
    for (int row = col + 1; row < n; ++row) {
      const double v = std::abs(a[static_cast<std::size_t>(row) * n + col]);
      if (v > best) {
        best = v;
        pivot = row;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = col; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(pivot) * n + j],
                  a[static_cast<std::size_t>(col) * n + j]);
      det = -det;
    }
    const double diag = a[static_cast<std::size_t>(col) * n + col];
    det *= diag;
    for (int row = col + 1; row < n; ++row) {
      const double factor = a[static_cast<std::size_t>(row) * n + col] / diag;
      if (factor == 0.0) continue;
      for (int j = col + 1; j < n; ++j)
        a[static_cast<std::size_t>(row) * n + j] -=
            factor * a[static_cast<std::size_t>(col) * n + j];
    }
  }
  return det;
}

}  // namespace xxchain
