#include "lienil/identities.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace lienil {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

uint64_t factorial_checked(int n) {
  uint64_t f = 1;
  for (int k = 2; k <= n; ++k) {
    if (f > UINT64_MAX / static_cast<uint64_t>(k)) throw ResourceLimitError("factorial overflows 64 bits");
    f *= static_cast<uint64_t>(k);
  }
  return f;
}

NCPoly gen(int n, int index, ScalarMode mode) { return NCPoly::generator(n, index, mode); }

void check_index(int n, int index) {
  if (index < 1 || index > n) {
    throw std::out_of_range("generator index " + std::to_string(index) + " outside 1.." + std::to_string(n));
  }
}

ModeVerdict run_blocks(const NCPoly& element, int n, ScalarMode mode, size_t* shapes) {
  const auto start = Clock::now();
  MultilinearIdeal ideal(n, n - 1, mode);
  ModeVerdict v;
  v.mode = mode;
  v.ideal_dimension = ideal.dimension();
  v.witness = ideal.defects(element);
  v.is_null = v.witness.empty();
  v.seconds = seconds_since(start);
  if (shapes != nullptr) *shapes = ideal.generators();
  return v;
}

ModeVerdict run_generic(const NCPoly& element, int n, ScalarMode mode, LcsStore& store, size_t* shapes) {
  const auto start = Clock::now();
  const auto comp = store.component(n, n - 1, MultiDegree::multilinear(n), mode);
  ModeVerdict v;
  v.mode = mode;
  v.ideal_dimension = comp.basis->rank();
  v.is_null = comp.basis->contains(element);
  v.seconds = seconds_since(start);
  if (shapes != nullptr) *shapes = segment_shapes(n, n - 1, SpanningSet::kReduced).size();
  return v;
}

}  // namespace

NCPoly null_pair_element(int m, int l, ScalarMode mode) {
  if (m < 1 || l < 1) throw std::invalid_argument("null pair indices must be >= 1");
  const int n = m + l;
  std::vector<int> left(static_cast<size_t>(m));
  std::vector<int> right(static_cast<size_t>(l));
  std::iota(left.begin(), left.end(), 1);
  std::iota(right.begin(), right.end(), m + 1);
  return bracket_of_generators(n, left, mode) * bracket_of_generators(n, right, mode);
}

PairReport check_null_pair(int m, int l, const std::vector<ScalarMode>& modes, const NullPairOptions& options) {
  if (m < 1 || l < 1) throw std::invalid_argument("null pair indices must be >= 1");
  if (modes.empty()) throw std::invalid_argument("at least one scalar mode is required");
  const auto start = Clock::now();
  PairReport report;
  report.m = m;
  report.l = l;
  report.method = options.method == NullPairMethod::kBlocks ? "blocks" : "generic";
  const int n = m + l;

  if (m == 1 || l == 1) {
    report.is_null = true;
    report.shortcut = m == 1 ? "m=1" : "l=1";
    report.elapsed_seconds = seconds_since(start);
    return report;
  }

  report.component_dimension = factorial_checked(n);
  if (report.component_dimension > options.max_columns) {
    throw ResourceLimitError("component (1,...,1) of A_" + std::to_string(n) + " has " +
                             std::to_string(report.component_dimension) + " columns, limit " +
                             std::to_string(options.max_columns));
  }

  const int a = options.canonical_order ? std::min(m, l) : m;
  const int b = options.canonical_order ? std::max(m, l) : l;
  LcsStore& store = options.store != nullptr ? *options.store : default_store();
  for (const auto mode : modes) {
    const NCPoly element = null_pair_element(a, b, mode);
    size_t shapes = 0;
    report.verdicts.push_back(options.method == NullPairMethod::kBlocks
                                  ? run_blocks(element, n, mode, &shapes)
                                  : run_generic(element, n, mode, store, &shapes));
    report.spanning_shapes = shapes;
  }
  report.is_null = report.verdicts.front().is_null;
  report.consensus = std::all_of(report.verdicts.begin(), report.verdicts.end(),
                                 [&](const ModeVerdict& v) { return v.is_null == report.is_null; });
  report.elapsed_seconds = seconds_since(start);
  return report;
}

PairReport check_null_pair(int m, int l, ScalarMode mode) { return check_null_pair(m, l, std::vector{mode}); }

ScanReport scan_null_pairs(int max_sum, const std::vector<ScalarMode>& modes, const NullPairOptions& options) {
  if (max_sum < 2) throw std::invalid_argument("max_sum must be >= 2");
  ScanReport scan;
  scan.max_sum = max_sum;
  for (int sum = 2; sum <= max_sum; ++sum) {
    for (int m = 1; 2 * m <= sum; ++m) {
      PairReport r = check_null_pair(m, sum - m, modes, options);
      if (!r.is_null) scan.not_null.emplace_back(r.m, r.l);
      if (r.is_null != r.parity_prediction()) scan.disagreements.emplace_back(r.m, r.l);
      scan.consensus = scan.consensus && r.consensus;
      scan.pairs.push_back(std::move(r));
    }
  }
  return scan;
}

NCPoly s_element(int n, int i, int j, int k, int l, int m, ScalarMode mode) {
  for (int idx : {i, j, k, l, m}) check_index(n, idx);
  const NCPoly inner = commutator(gen(n, l, mode), gen(n, m, mode));
  return commutator(gen(n, i, mode), gen(n, j, mode)) * commutator(gen(n, k, mode), inner) +
         commutator(gen(n, k, mode), gen(n, j, mode)) * commutator(gen(n, i, mode), inner);
}

const std::vector<RTerm>& r_terms() {
  // Positions: 0 = i, 1 = j, 2 = k, 3 = l, 4 = m.
  static const std::vector<RTerm> terms = {
      {-1, 2, {1, 2, 3, 4, 0}}, {1, 2, {1, 2, 4, 3, 0}},  {-1, 2, {1, 2, 0, 3, 4}}, {-1, 2, {1, 4, 3, 2, 0}},
      {1, 2, {1, 4, 2, 3, 0}},  {-1, 2, {1, 4, 0, 3, 2}}, {-1, 1, {1, 0, 2, 3, 4}}, {-1, 1, {1, 0, 4, 3, 2}},
      {1, 2, {3, 2, 4, 1, 0}},  {-1, 2, {3, 2, 0, 1, 4}}, {1, 2, {3, 4, 2, 1, 0}},  {-1, 2, {3, 4, 0, 1, 2}},
      {-1, 2, {2, 0, 4, 1, 3}},
  };
  return terms;
}

NCPoly r_element(int n, int i, int j, int k, int l, int m, ScalarMode mode) {
  const std::array<int, 5> idx{i, j, k, l, m};
  NCPoly r(n, mode);
  for (const auto& t : r_terms()) {
    const auto& p = t.args;
    r += Scalar(mode, t.num, t.den) * s_element(n, idx[p[0]], idx[p[1]], idx[p[2]], idx[p[3]], idx[p[4]], mode);
  }
  return r;
}

NCPoly four_term_defect(const NCPoly& a, const NCPoly& b, const NCPoly& c, const NCPoly& d) {
  const NCPoly lhs = commutator(a, b) * commutator(c, d) + commutator(a, d) * commutator(c, b);
  const NCPoly rhs = commutator(commutator(a * c, b), d) + a * commutator(d, commutator(c, b)) -
                     commutator(commutator(a, b), d) * c;
  return lhs - rhs;
}

bool verify_four_term_identity(const NCPoly& a, const NCPoly& b, const NCPoly& c, const NCPoly& d) {
  return four_term_defect(a, b, c, d).is_zero();
}

bool verify_r_identity(int i, int j, int k, int l, int m, ScalarMode mode) {
  if (!mode.is_exact() && mode.prime() <= 3) {
    throw std::invalid_argument("the R identity has denominators 2 and 3; characteristic " +
                                std::to_string(mode.prime()) + " is not allowed");
  }
  const int n = std::max({5, i, j, k, l, m});
  for (int idx : {i, j, k, l, m}) check_index(n, idx);
  const NCPoly lhs = commutator(gen(n, i, mode), gen(n, j, mode)) *
                     commutator(gen(n, k, mode), commutator(gen(n, l, mode), gen(n, m, mode)));
  const NCPoly rhs = Scalar(mode, 1, 3) * (r_element(n, i, j, m, l, k, mode) - r_element(n, i, j, l, m, k, mode));
  return lhs == rhs;
}

namespace {

/// Target-ideal membership for one multidegree, by blocks when delta is
/// multilinear in all n letters and by echelon form otherwise.
class TargetOracle {
 public:
  TargetOracle(int n, int target, const MultiDegree& delta, ScalarMode mode, LcsStore& store) {
    const bool multilinear = delta == MultiDegree::multilinear(n) && (mode.is_exact() || mode.prime() > uint64_t(n));
    if (target <= 1) {
      method_ = "trivial";
    } else if (multilinear) {
      method_ = "blocks";
      ideal_.emplace(n, target, mode);
    } else {
      method_ = "generic";
      basis_ = store.component(n, target, delta, mode).basis;
    }
  }

  bool contains(const NCPoly& v) const {
    if (v.is_zero() || method_ == "trivial") return true;
    return ideal_ ? ideal_->contains(v) : basis_->contains(v);
  }
  const std::string& method() const { return method_; }

 private:
  std::string method_;
  std::optional<MultilinearIdeal> ideal_;
  std::shared_ptr<const SpanBasis> basis_;
};

std::vector<NCPoly> basis_rows(int n, int i, const MultiDegree& alpha, ScalarMode mode, LcsStore& store) {
  if (alpha.total() == 0) return {};
  if (i <= 1) {
    std::vector<NCPoly> out;
    for (const auto& w : words_of_degree(alpha)) out.push_back(NCPoly::monomial(n, w, Scalar(mode, 1)));
    return out;
  }
  if (alpha.total() < i) return {};
  return store.component(n, i, alpha, mode).basis->rows();
}

void check_guard(const MultiDegree& delta, uint64_t max_columns) {
  if (multinomial(delta) > max_columns) {
    throw ResourceLimitError("component " + delta.to_string() + " exceeds the column limit");
  }
}

std::string witness_text(const NCPoly& v) {
  std::string s = v.to_string();
  if (s.size() > 400) s = s.substr(0, 400) + " ...";
  return s;
}

}  // namespace

ContainmentReport check_gupta_levin(int m, int l, const MultiDegree& delta, ScalarMode mode,
                                    std::optional<int> target, LcsStore& store) {
  if (m < 2 || l < 2) throw std::invalid_argument("Gupta-Levin check needs m, l >= 2");
  const int n = delta.n();
  check_guard(delta, store.options().max_columns);
  ContainmentReport report;
  report.target = target.value_or(m + l - 2);
  TargetOracle oracle(n, report.target, delta, mode, store);
  report.method = oracle.method();
  for (const auto& alpha : multidegrees_below(delta)) {
    const MultiDegree beta = delta - alpha;
    if (alpha.total() < m || beta.total() < l) continue;
    const auto left = basis_rows(n, m, alpha, mode, store);
    const auto right = basis_rows(n, l, beta, mode, store);
    if (left.empty() || right.empty()) continue;
    ++report.splits;
    for (const auto& a : left) {
      for (const auto& b : right) {
        const NCPoly prod = a * b;
        ++report.products;
        if (!oracle.contains(prod)) {
          report.holds = false;
          report.witness = witness_text(prod);
          return report;
        }
      }
    }
  }
  return report;
}

ContainmentReport check_triple_bracket(int i, int j, int k, const MultiDegree& delta, ScalarMode mode,
                                       LcsStore& store) {
  if (i < 1 || j < 1 || k < 1) throw std::invalid_argument("triple bracket indices must be >= 1");
  const int n = delta.n();
  check_guard(delta, store.options().max_columns);
  ContainmentReport report;
  report.target = std::max(1, i + j + k - 3);
  TargetOracle oracle(n, report.target, delta, mode, store);
  report.method = oracle.method();
  for (const auto& alpha : multidegrees_below(delta)) {
    if (alpha.total() == 0) continue;
    const MultiDegree rest = delta - alpha;
    const auto as = basis_rows(n, i, alpha, mode, store);
    if (as.empty()) continue;
    for (const auto& beta : multidegrees_below(rest)) {
      const MultiDegree gamma = rest - beta;
      if (beta.total() == 0 || gamma.total() == 0) continue;
      const auto bs = basis_rows(n, j, beta, mode, store);
      const auto cs = basis_rows(n, k, gamma, mode, store);
      if (bs.empty() || cs.empty()) continue;
      ++report.splits;
      for (const auto& a : as) {
        for (const auto& b : bs) {
          const NCPoly ab = commutator(a, b);
          for (const auto& c : cs) {
            const NCPoly v = commutator(ab, c);
            ++report.products;
            if (!oracle.contains(v)) {
              report.holds = false;
              report.witness = witness_text(v);
              return report;
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace lienil
