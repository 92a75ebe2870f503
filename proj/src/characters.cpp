#include "lienil/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <gmpxx.h>

namespace lienil {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0 || (k > 0 && parts_[k] > parts_[k - 1])) {
      throw std::invalid_argument("partition parts must be weakly decreasing and nonnegative");
    }
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

MultiDegree Partition::as_weight(int n) const {
  if (length() > n) throw std::invalid_argument("partition " + to_string() + " has more than n parts");
  std::vector<int> e(static_cast<size_t>(n), 0);
  std::copy(parts_.begin(), parts_.end(), e.begin());
  return MultiDegree(e);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
  return s + ")";
}

WeightTable kostka_weights(const Partition& lambda, int n) {
  WeightTable table{n, lambda.size(), {}};
  if (lambda.length() > n) return table;
  const auto& rows = lambda.parts();
  std::vector<std::vector<int>> t;
  for (int r : rows) t.emplace_back(static_cast<size_t>(r), 0);
  std::vector<int> content(static_cast<size_t>(n), 0);
  std::map<std::vector<int>, int64_t> counts;
  std::function<void(size_t, size_t)> fill = [&](size_t r, size_t c) {
    if (r == rows.size()) {
      ++counts[content];
      return;
    }
    if (c == t[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      ++content[static_cast<size_t>(v - 1)];
      fill(r, c + 1);
      --content[static_cast<size_t>(v - 1)];
    }
  };
  fill(0, 0);
  for (const auto& [mu, k] : counts) table.set(MultiDegree(mu), k);
  return table;
}

uint64_t weyl_dimension(const Partition& lambda, int n) {
  if (lambda.length() > n) return 0;
  const auto& rows = lambda.parts();
  mpz_class num = 1, den = 1;
  for (size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < rows[r]; ++c) {
      int below = 0;
      for (size_t r2 = r + 1; r2 < rows.size() && rows[r2] > c; ++r2) ++below;
      const int hook = (rows[r] - c - 1) + below + 1;
      num *= n + c - static_cast<int>(r);
      den *= hook;
    }
  }
  mpz_class q = num / den;
  return q.get_ui();
}

std::string SchurDecomposition::to_string() const {
  if (multiplicities.empty()) return "0";
  std::string s;
  for (const auto& [lam, m] : multiplicities) {
    if (!s.empty()) s += " + ";
    s += std::to_string(m) + " * s" + lam.to_string();
  }
  return s;
}

SchurDecomposition schur_decompose(const WeightTable& weights) {
  if (!weights.is_symmetric()) throw std::invalid_argument("weight table is not symmetric under S_n");
  WeightTable rest = weights;
  SchurDecomposition out;
  auto lex_less = [](const MultiDegree& a, const MultiDegree& b) { return a.exponents() < b.exponents(); };
  while (!rest.entries.empty()) {
    std::optional<MultiDegree> top;
    for (const auto& [nu, m] : rest.entries) {
      if (nu.is_dominant() && (!top || lex_less(*top, nu))) top = nu;
    }
    if (!top) throw InconsistencyError("not a polynomial character: no dominant weight left");
    const int64_t mult = rest.at(*top);
    if (mult < 0) {
      throw InconsistencyError("not a polynomial character: negative multiplicity at " + top->to_string());
    }
    const Partition lambda(top->exponents());
    out.multiplicities[lambda] = mult;
    for (const auto& [nu, k] : kostka_weights(lambda, weights.n).entries) {
      if (nu.total() <= rest.max_degree) rest.set(nu, rest.at(nu) - mult * k);
    }
  }
  return out;
}

WeightTable character_of(const SchurDecomposition& decomposition, int n, int max_degree) {
  WeightTable table{n, max_degree, {}};
  for (const auto& [lam, m] : decomposition.multiplicities) {
    if (lam.size() > max_degree) continue;
    for (const auto& [nu, k] : kostka_weights(lam, n).entries) table.set(nu, table.at(nu) + m * k);
  }
  return table;
}

KernelTable k_weights(int n, int i, ScalarMode mode, std::optional<int> max_degree, LcsStore& store) {
  if (i < 2) throw std::invalid_argument("k_weights requires i >= 2");
  KernelTable k;
  k.n = n;
  k.i = i;
  k.max_degree = max_degree.value_or(default_max_degree(n, i + 1));
  const WeightTable upper = lambda_weights(n, i + 1, k.max_degree, mode, store);
  const WeightTable lower = lambda_weights(n, i, k.max_degree, mode, store);
  k.upper = lambda_dim_of(upper, i + 1);
  k.lower = lambda_dim_of(lower, i);
  if (!k.upper.stabilized || !k.lower.stabilized) {
    throw InconsistencyError("Lambda tables for n=" + std::to_string(n) + " have not stabilized at degree " +
                             std::to_string(k.max_degree) + "; raise max_degree");
  }
  k.weights = WeightTable{n, k.max_degree, {}};
  for (int d = 0; d <= k.max_degree; ++d) {
    for (const auto& nu : multidegrees_of_total(n, d)) {
      const int64_t v = upper.at(nu) - lower.at(nu);
      if (v < 0) throw InconsistencyError("negative kernel weight at " + nu.to_string());
      k.weights.set(nu, v);
    }
  }
  return k;
}

CorollaryReport verify_corollary_k3(int n, ScalarMode mode, std::optional<int> max_degree, LcsStore& store) {
  CorollaryReport rep;
  rep.n = n;
  rep.kernel = k_weights(n, 3, mode, max_degree, store);
  rep.decomposition = schur_decompose(rep.kernel.weights);
  rep.expected.multiplicities = {{Partition{2, 1}, 1}, {Partition{2, 2}, 1}};
  rep.passed = rep.decomposition == rep.expected;
  return rep;
}

}  // namespace lienil
