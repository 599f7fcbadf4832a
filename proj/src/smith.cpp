#include "covers/smith.hpp"

#include <algorithm>

namespace covers::exact {

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> a) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  size_t n = std::min(rows, cols);
  std::vector<Int> diag;

  for (size_t p = 0; p < n; ++p) {
    // find a nonzero pivot in the remaining block
    size_t pi = p, pj = p;
    bool found = false;
    Int best = 0;
    for (size_t i = p; i < rows; ++i)
      for (size_t j = p; j < cols; ++j)
        if (a[i][j] != 0 && (!found || iabs(a[i][j]) < best)) {
          best = iabs(a[i][j]);
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(a[p], a[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][p], a[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = p + 1; i < rows; ++i) {
        if (a[i][p] == 0) continue;
        Int q = a[i][p] / a[p][p];
        for (size_t j = p; j < cols; ++j) a[i][j] -= q * a[p][j];
        if (a[i][p] != 0) {  // remainder smaller than pivot: swap up and redo
          std::swap(a[p], a[i]);
          clean = false;
        }
      }
      if (!clean) continue;
      for (size_t j = p + 1; j < cols; ++j) {
        if (a[p][j] == 0) continue;
        Int q = a[p][j] / a[p][p];
        for (size_t i = p; i < rows; ++i) a[i][j] -= q * a[i][p];
        if (a[p][j] != 0) {
          for (size_t i = p; i < rows; ++i) std::swap(a[i][p], a[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: pivot must divide every remaining entry
      for (size_t i = p + 1; i < rows && clean; ++i)
        for (size_t j = p + 1; j < cols && clean; ++j)
          if (a[i][j] % a[p][p] != 0) {
            for (size_t jj = p; jj < cols; ++jj) a[p][jj] += a[i][jj];
            clean = false;
          }
    }
    diag.push_back(iabs(a[p][p]));
  }
  while (diag.size() < n) diag.push_back(Int(0));
  return diag;
}

}  // namespace covers::exact
