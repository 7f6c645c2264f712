#pragma once

#include <vector>

namespace xxchain {

// Determinant of a dense row-major n-by-n matrix via in-place LU
// factorization with partial pivoting, O(n^3). The matrix is taken by
// value and consumed. n = 0 yields 1.
double lu_determinant(std::vector<double> a, int n);

}  // namespace xxchain
