#pragma once

// Brute-force references used to check the library against first principles.

#include <functional>
#include <vector>

#include <gmpxx.h>

#include "lienil/ncpoly.hpp"

namespace oracle {

using lienil::MultiDegree;
using lienil::NCPoly;
using lienil::Scalar;
using lienil::ScalarMode;
using lienil::Word;

/// Rank of a list of homogeneous polynomials by dense Gaussian elimination over Q.
inline size_t rank(const std::vector<NCPoly>& vectors, const MultiDegree& delta) {
  const auto words = lienil::words_of_degree(delta);
  std::vector<std::vector<mpq_class>> m;
  for (const auto& v : vectors) {
    std::vector<mpq_class> row(words.size());
    for (size_t c = 0; c < words.size(); ++c) row[c] = v.coefficient(words[c]).rational();
    m.push_back(std::move(row));
  }
  size_t r = 0;
  for (size_t c = 0; c < words.size() && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (size_t k = 0; k < m.size(); ++k) {
      if (k == r || m[k][c] == 0) continue;
      const mpq_class f = m[k][c] / m[r][c];
      for (size_t j = c; j < words.size(); ++j) m[k][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Every u * [w_1, ..., w_i] * v of multidegree delta with nonempty words w_k.
inline std::vector<NCPoly> m_by_definition(const MultiDegree& delta, int i) {
  const int n = delta.n();
  const int len = delta.total();
  const ScalarMode exact = ScalarMode::exact();
  std::vector<NCPoly> out;
  std::vector<int> cuts(static_cast<size_t>(i + 1));
  for (const auto& word : lienil::words_of_degree(delta)) {
    auto piece = [&](int from, int to) {
      return NCPoly::monomial(n, Word::from_bytes(word.bytes().substr(from, to - from)), Scalar(exact, 1));
    };
    std::function<void(int, int)> rec = [&](int k, int lo) {
      if (k == i + 1) {
        std::vector<NCPoly> entries;
        for (int e = 1; e <= i; ++e) entries.push_back(piece(cuts[e - 1], cuts[e]));
        out.push_back(piece(0, cuts[0]) * lienil::left_normed_bracket(entries) * piece(cuts[i], len));
        return;
      }
      for (int p = lo; p <= len - (i - k); ++p) {
        cuts[k] = p;
        rec(k + 1, p + 1);
      }
    };
    rec(0, 0);
  }
  return out;
}

}  // namespace oracle
