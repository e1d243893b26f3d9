#include "gnum/rank.hpp"

#include <map>
#include <vector>

namespace gnum {

namespace {

using SparseCol = std::vector<std::pair<int, Rat>>; // (row, value) sorted by row

// out = a - coeff * b, merged by row.
SparseCol axpy(const SparseCol& a, const Rat& coeff, const SparseCol& b) {
  SparseCol out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -coeff * b[j].second);
      ++j;
    } else {
      Rat v = a[i].second - coeff * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

long long exact_rank(const SparseIntMat& m) {
  std::map<int, SparseCol> pivots; // leading row -> reduced pivot column
  long long rank = 0;
  for (int j = 0; j < m.cols; ++j) {
    SparseCol col;
    col.reserve(m.col[j].size());
    for (auto [r, v] : m.col[j]) col.emplace_back(r, Rat(static_cast<long>(v)));
    while (!col.empty()) {
      int lead = col.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(col));
        ++rank;
        break;
      }
      Rat coeff = col.front().second / it->second.front().second;
      col = axpy(col, coeff, it->second);
    }
  }
  return rank;
}

} // namespace gnum
