#include "lienil/multilinear.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "echelon.hpp"

namespace lienil {

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<std::vector<std::pair<int, int>>> standard_tableaux(const std::vector<int>& shape) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<int> row_len(shape.size(), 0);
  std::vector<std::pair<int, int>> cells;
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.push_back(cells);
      return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
      if (row_len[r] < shape[r] && (r == 0 || row_len[r - 1] > row_len[r])) {
        cells.emplace_back(static_cast<int>(r), row_len[r]);
        ++row_len[r];
        rec(k + 1);
        --row_len[r];
        cells.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

namespace {

template <class F>
class Block {
 public:
  using Elem = typename F::Elem;
  using Mat = std::vector<Elem>;  // row-major dim x dim

  Block(F field, std::vector<int> shape, ScalarMode mode) : f_(std::move(field)), shape_(std::move(shape)) {
    const auto tabs = standard_tableaux(shape_);
    dim_ = tabs.size();
    n_ = static_cast<int>(tabs.front().size());
    std::map<std::vector<std::pair<int, int>>, int32_t> index;
    for (size_t t = 0; t < tabs.size(); ++t) index[tabs[t]] = static_cast<int32_t>(t);
    acts_.resize(static_cast<size_t>(n_ - 1));
    for (int k = 1; k < n_; ++k) {
      auto& act = acts_[static_cast<size_t>(k - 1)];
      act.reserve(dim_);
      for (const auto& tab : tabs) {
        const auto [r1, c1] = tab[static_cast<size_t>(k - 1)];
        const auto [r2, c2] = tab[static_cast<size_t>(k)];
        Act a{f_.one(), -1, f_.zero()};
        if (r1 == r2) {
          a.diag = f_.one();
        } else if (c1 == c2) {
          a.diag = f_.neg(f_.one());
          a.fixed = false;
        } else {
          auto swapped = tab;
          std::swap(swapped[static_cast<size_t>(k - 1)], swapped[static_cast<size_t>(k)]);
          const long r = (c2 - r2) - (c1 - r1);  // axial distance
          a.diag = f_.from_scalar(Scalar(mode, 1, r));
          a.partner = index.at(swapped);
          a.off = r1 < r2 ? f_.one() : f_.from_scalar(Scalar(mode, r * r - 1, r * r));
        }
        act.push_back(a);
      }
    }
  }

  const std::vector<int>& shape() const { return shape_; }
  size_t dim() const { return dim_; }
  const F& field() const { return f_; }

  /// m <- m * rho(s_k), in place: s_k only mixes columns c and partner(c).
  void right_mult(Mat& m, int k) const {
    const auto& act = acts_[static_cast<size_t>(k - 1)];
    for (size_t r = 0; r < dim_; ++r) {
      Elem* row = m.data() + r * dim_;
      for (size_t c = 0; c < dim_; ++c) {
        const Act& a = act[c];
        if (a.partner < 0) {
          if (!a.fixed) row[c] = f_.neg(row[c]);
          continue;
        }
        const auto p = static_cast<size_t>(a.partner);
        if (p < c) continue;
        const Act& b = act[p];
        const Elem x = row[c], y = row[p];
        row[c] = f_.mul(x, a.diag);
        f_.submul(row[c], f_.neg(a.off), y);
        row[p] = f_.mul(y, b.diag);
        f_.submul(row[p], f_.neg(b.off), x);
      }
    }
  }

  /// rho(word) * X for a dim x k row-major X, by row operations only.
  void left_apply(const std::string& word, std::vector<Elem>& x, size_t k) const {
    // rho(word) = rho(s_{a_m}) ... rho(s_{a_1}); apply a_1 first.
    for (int s : swaps_to(word, identity_word())) {
      const auto& act = acts_[static_cast<size_t>(s - 1)];
      for (size_t c = 0; c < dim_; ++c) {
        const Act& a = act[c];
        Elem* rc = x.data() + c * k;
        if (a.partner < 0) {
          if (!a.fixed) {
            for (size_t t = 0; t < k; ++t) rc[t] = f_.neg(rc[t]);
          }
          continue;
        }
        const auto p = static_cast<size_t>(a.partner);
        if (p < c) continue;
        const Act& b = act[p];
        Elem* rp = x.data() + p * k;
        for (size_t t = 0; t < k; ++t) {
          const Elem u = rc[t], v = rp[t];
          rc[t] = f_.mul(u, a.diag);
          f_.submul(rc[t], b.off, v);
          rp[t] = f_.mul(v, b.diag);
          f_.submul(rp[t], a.off, u);
        }
      }
    }
  }

  /// rho(word) as a product of adjacent transpositions.
  Mat of_word(const std::string& word) const {
    Mat m = identity();
    apply_path(m, word, identity_word());
    return m;
  }

  /// sum_p c_p rho(p). Consecutive terms are reached from the previous matrix
  /// when that takes fewer transpositions than starting from the identity.
  Mat image(const std::vector<std::pair<std::string, Elem>>& terms) const {
    Mat acc(dim_ * dim_, f_.zero());
    for (const auto& [word, c] : terms) {
      const auto from_id = swaps_to(word, identity_word());
      if (last_word_.empty() || swaps_to(word, last_word_).size() >= from_id.size()) {
        last_ = identity();
        for (auto it = from_id.rbegin(); it != from_id.rend(); ++it) right_mult(last_, *it);
      } else {
        apply_path(last_, word, last_word_);
      }
      last_word_ = word;
      const Elem nc = f_.neg(c);
      for (size_t e = 0; e < acc.size(); ++e) {
        if (!F::is_zero(last_[e])) f_.submul(acc[e], nc, last_[e]);
      }
    }
    return acc;
  }

 private:
  struct Act {
    Elem diag;
    int32_t partner;
    Elem off;
    bool fixed = true;  // partner < 0: diag is +1 (fixed) or -1
  };

  Mat identity() const {
    Mat m(dim_ * dim_, f_.zero());
    for (size_t d = 0; d < dim_; ++d) m[d * dim_ + d] = f_.one();
    return m;
  }

  std::string identity_word() const {
    std::string w;
    for (int k = 1; k <= n_; ++k) w.push_back(static_cast<char>(k));
    return w;
  }

  /// Adjacent swaps a_1..a_m (bubble sort) with word * s_{a_1} ... s_{a_m} = target.
  std::vector<int> swaps_to(const std::string& word, const std::string& target) const {
    std::vector<int> rank(256, 0);
    for (size_t j = 0; j < target.size(); ++j) rank[static_cast<unsigned char>(target[j])] = static_cast<int>(j);
    std::vector<int> w;
    for (char ch : word) w.push_back(rank[static_cast<unsigned char>(ch)]);
    std::vector<int> swaps;
    for (bool sorted = false; !sorted;) {
      sorted = true;
      for (size_t j = 0; j + 1 < w.size(); ++j) {
        if (w[j] > w[j + 1]) {
          std::swap(w[j], w[j + 1]);
          swaps.push_back(static_cast<int>(j + 1));
          sorted = false;
        }
      }
    }
    return swaps;
  }

  /// m = rho(target) on entry, rho(word) on exit: word = target * s_{a_m} ... s_{a_1}.
  void apply_path(Mat& m, const std::string& word, const std::string& target) const {
    const auto swaps = swaps_to(word, target);
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) right_mult(m, *it);
  }

  F f_;
  std::vector<int> shape_;
  size_t dim_ = 0;
  int n_ = 0;
  std::vector<std::vector<Act>> acts_;
  mutable std::string last_word_;
  mutable Mat last_;
};

template <class F>
F make_field(ScalarMode mode) {
  if constexpr (std::is_same_v<F, detail::ModField>) {
    return F(mode.prime());
  } else {
    return F();
  }
}

void check_characteristic(int n, ScalarMode mode) {
  if (!mode.is_exact() && mode.prime() <= static_cast<uint64_t>(n)) {
    throw std::invalid_argument("the multilinear block decomposition needs a prime larger than the degree");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SeminormalRepresentation

struct SeminormalRepresentation::Impl {
  virtual ~Impl() = default;
  virtual size_t dimension() const = 0;
  virtual std::vector<std::vector<Scalar>> matrix(const std::string& word) const = 0;
};

namespace {

template <class F>
struct RepImpl final : SeminormalRepresentation::Impl {
  RepImpl(const std::vector<int>& shape, ScalarMode mode) : block(make_field<F>(mode), shape, mode) {}
  size_t dimension() const override { return block.dim(); }
  std::vector<std::vector<Scalar>> matrix(const std::string& word) const override {
    auto m = block.of_word(word);
    std::vector<std::vector<Scalar>> out(block.dim());
    for (size_t r = 0; r < block.dim(); ++r) {
      for (size_t c = 0; c < block.dim(); ++c) out[r].push_back(block.field().to_scalar(m[r * block.dim() + c]));
    }
    return out;
  }
  Block<F> block;
};

std::string word_of_permutation(const std::vector<int>& p) {
  std::string w;
  std::vector<bool> seen(p.size() + 1, false);
  for (int x : p) {
    if (x < 1 || x > static_cast<int>(p.size()) || seen[static_cast<size_t>(x)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<size_t>(x)] = true;
    w.push_back(static_cast<char>(x));
  }
  return w;
}

}  // namespace

SeminormalRepresentation::SeminormalRepresentation(std::vector<int> shape, ScalarMode mode) : shape_(std::move(shape)) {
  const int n = std::accumulate(shape_.begin(), shape_.end(), 0);
  if (n < 1 || !std::is_sorted(shape_.rbegin(), shape_.rend()) || shape_.back() < 1) {
    throw std::invalid_argument("shape must be a partition with positive parts");
  }
  check_characteristic(n, mode);
  if (mode.is_exact()) {
    impl_ = std::make_unique<RepImpl<detail::RationalField>>(shape_, mode);
  } else {
    impl_ = std::make_unique<RepImpl<detail::ModField>>(shape_, mode);
  }
}

SeminormalRepresentation::~SeminormalRepresentation() = default;
SeminormalRepresentation::SeminormalRepresentation(SeminormalRepresentation&&) noexcept = default;

size_t SeminormalRepresentation::dimension() const { return impl_->dimension(); }

std::vector<std::vector<Scalar>> SeminormalRepresentation::matrix(const std::vector<int>& permutation) const {
  if (permutation.size() != static_cast<size_t>(std::accumulate(shape_.begin(), shape_.end(), 0))) {
    throw std::invalid_argument("permutation size differs from the shape size");
  }
  return impl_->matrix(word_of_permutation(permutation));
}

// ---------------------------------------------------------------------------
// MultilinearIdeal

struct MultilinearIdeal::Impl {
  virtual ~Impl() = default;
  virtual uint64_t dimension() const = 0;
  virtual std::vector<MultilinearIdeal::BlockRank> block_ranks() const = 0;
  virtual std::vector<Defect> defects(const NCPoly& v) const = 0;
};

namespace {

template <class F>
class IdealImpl final : public MultilinearIdeal::Impl {
 public:
  using Elem = typename F::Elem;
  using Terms = std::vector<std::pair<std::string, Elem>>;

  IdealImpl(int n, ScalarMode mode, const std::vector<std::vector<std::pair<Word, int>>>& generators)
      : n_(n), mode_(mode), f_(make_field<F>(mode)) {
    for (const auto& shape : partitions_of(n)) {
      Part part{Block<F>(f_, shape, mode), detail::DenseEchelon<F>(f_, 0)};
      const size_t dim = part.block.dim();
      part.space = detail::DenseEchelon<F>(f_, dim);
      for (const auto& g : generators) {
        Terms terms;
        for (const auto& [w, s] : g) terms.emplace_back(w.bytes(), f_.from_int(s));
        insert_rows(part.space, part.block.image(terms), dim);
        if (part.space.rank() == dim) break;
      }
      parts_.push_back(std::move(part));
    }
  }

  uint64_t dimension() const override {
    uint64_t d = 0;
    for (const auto& p : parts_) d += p.block.dim() * p.space.rank();
    return d;
  }

  std::vector<MultilinearIdeal::BlockRank> block_ranks() const override {
    std::vector<MultilinearIdeal::BlockRank> out;
    for (const auto& p : parts_) out.push_back({p.block.shape(), p.block.dim(), p.space.rank()});
    return out;
  }

  std::vector<MultilinearIdeal::Defect> defects(const NCPoly& v) const override {
    if (v.mode() != mode_) throw ModeMismatch("multilinear ideal: polynomial mode differs");
    Terms terms;
    for (const auto& [w, c] : v.terms()) {
      if (w.length() != static_cast<size_t>(n_) || multidegree_of(w, n_) != MultiDegree::multilinear(n_)) {
        throw std::invalid_argument("vector is not multilinear in " + std::to_string(n_) + " letters");
      }
      terms.emplace_back(w.bytes(), f_.from_scalar(c));
    }
    std::vector<MultilinearIdeal::Defect> out;
    if (terms.empty()) return out;
    for (const auto& p : parts_) {
      const size_t dim = p.block.dim();
      if (p.space.rank() == dim) continue;
      auto extended = p.space;
      insert_rows(extended, p.block.image(terms), dim);
      if (extended.rank() > p.space.rank()) out.push_back({p.block.shape(), extended.rank() - p.space.rank()});
    }
    return out;
  }

 private:
  struct Part {
    Block<F> block;
    detail::DenseEchelon<F> space;
  };

  void insert_rows(detail::DenseEchelon<F>& space, const typename Block<F>::Mat& m, size_t dim) const {
    for (size_t r = 0; r < dim && space.rank() < dim; ++r) {
      detail::SparseVec<F> row;
      for (size_t c = 0; c < dim; ++c) {
        const Elem& x = m[r * dim + c];
        if (!F::is_zero(x)) {
          row.cols.push_back(static_cast<uint32_t>(c));
          row.vals.push_back(x);
        }
      }
      if (!row.empty()) space.insert(row);
    }
  }

  int n_;
  ScalarMode mode_;
  F f_;
  std::vector<Part> parts_;
};

}  // namespace

namespace {

std::vector<std::vector<std::pair<Word, int>>> ideal_generators(int n, int i, ScalarMode mode, SpanningSet set) {
  if (n < 1 || n > 12) throw std::invalid_argument("multilinear ideal needs 1 <= n <= 12");
  if (i < 1) throw std::invalid_argument("series index must be >= 1");
  check_characteristic(n, mode);
  std::string identity;
  for (int k = 1; k <= n; ++k) identity.push_back(static_cast<char>(k));
  const Word base = Word::from_bytes(identity);
  std::vector<std::vector<std::pair<Word, int>>> gens;
  for (const auto& shape : segment_shapes(n, i, set)) gens.push_back(expand_shape(base, shape));
  return gens;
}

/// Null space of a rows x cols row-major matrix, as vectors of length cols.
template <class F>
std::vector<std::vector<typename F::Elem>> null_space(const F& f, std::vector<typename F::Elem> y, size_t rows,
                                                      size_t cols) {
  std::vector<long> pivot_row(cols, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && F::is_zero(y[p * cols + c])) ++p;
    if (p == rows) continue;
    if (p != r) std::swap_ranges(y.begin() + static_cast<long>(p * cols), y.begin() + static_cast<long>((p + 1) * cols),
                                 y.begin() + static_cast<long>(r * cols));
    const auto inv = f.inv(y[r * cols + c]);
    for (size_t t = c; t < cols; ++t) f.scale(y[r * cols + t], inv);
    for (size_t q = 0; q < rows; ++q) {
      if (q == r || F::is_zero(y[q * cols + c])) continue;
      const auto a = y[q * cols + c];
      f.axpy_neg(y.data() + q * cols + c, a, y.data() + r * cols + c, cols - c);
    }
    pivot_row[c] = static_cast<long>(r++);
  }
  std::vector<std::vector<typename F::Elem>> out;
  for (size_t j = 0; j < cols; ++j) {
    if (pivot_row[j] >= 0) continue;
    std::vector<typename F::Elem> v(cols, f.zero());
    v[j] = f.one();
    for (size_t c = 0; c < cols; ++c) {
      if (pivot_row[c] >= 0) v[c] = f.neg(y[static_cast<size_t>(pivot_row[c]) * cols + j]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// Rank of the stacked block images, tracked through the common right kernel
/// K (dim x k): each generator e replaces K by K * null(rho(e) K). Only row
/// operations on dim x k matrices are needed, and k shrinks quickly.
template <class F>
std::vector<MultilinearIdeal::BlockRank> ranks_only(int n, ScalarMode mode,
                                                    const std::vector<std::vector<std::pair<Word, int>>>& gens) {
  using Elem = typename F::Elem;
  const F f = make_field<F>(mode);
  std::vector<MultilinearIdeal::BlockRank> out;
  for (const auto& shape : partitions_of(n)) {
    const Block<F> block(f, shape, mode);
    const size_t dim = block.dim();
    size_t k = dim;
    std::vector<Elem> kernel(dim * dim, f.zero());
    for (size_t d = 0; d < dim; ++d) kernel[d * dim + d] = f.one();
    for (const auto& g : gens) {
      if (k == 0) break;
      std::vector<Elem> y(dim * k, f.zero());
      for (const auto& [w, sgn] : g) {
        auto term = kernel;
        block.left_apply(w.bytes(), term, k);
        f.axpy_neg(y.data(), f.from_int(-sgn), term.data(), y.size());
      }
      const auto null = null_space(f, std::move(y), dim, k);
      if (null.size() == k) continue;
      std::vector<Elem> next(dim * null.size(), f.zero());
      for (size_t i = 0; i < dim; ++i) {
        for (size_t t = 0; t < k; ++t) {
          const Elem& kit = kernel[i * k + t];
          if (F::is_zero(kit)) continue;
          for (size_t u = 0; u < null.size(); ++u) f.submul(next[i * null.size() + u], f.neg(kit), null[u][t]);
        }
      }
      kernel = std::move(next);
      k = null.size();
    }
    out.push_back({shape, dim, dim - k});
  }
  return out;
}

}  // namespace

std::vector<MultilinearIdeal::BlockRank> multilinear_block_ranks(int n, int i, ScalarMode mode, SpanningSet set) {
  const auto gens = ideal_generators(n, i, mode, set);
  if (mode.is_exact()) return ranks_only<detail::RationalField>(n, mode, gens);
  return ranks_only<detail::ModField>(n, mode, gens);
}

MultilinearIdeal::MultilinearIdeal(int n, int i, ScalarMode mode, SpanningSet set) : n_(n), i_(i), mode_(mode) {
  const auto gens = ideal_generators(n, i, mode, set);
  generators_ = gens.size();
  if (mode.is_exact()) {
    impl_ = std::make_unique<IdealImpl<detail::RationalField>>(n, mode, gens);
  } else {
    impl_ = std::make_unique<IdealImpl<detail::ModField>>(n, mode, gens);
  }
}

MultilinearIdeal::~MultilinearIdeal() = default;
MultilinearIdeal::MultilinearIdeal(MultilinearIdeal&&) noexcept = default;

uint64_t MultilinearIdeal::dimension() const { return impl_->dimension(); }

std::vector<MultilinearIdeal::BlockRank> MultilinearIdeal::block_ranks() const { return impl_->block_ranks(); }

std::vector<MultilinearIdeal::Defect> MultilinearIdeal::defects(const NCPoly& v) const { return impl_->defects(v); }

long MultilinearIdeal::first_outside(std::span<const NCPoly> vectors) const {
  for (size_t k = 0; k < vectors.size(); ++k) {
    if (!contains(vectors[k])) return static_cast<long>(k);
  }
  return -1;
}

}  // namespace lienil
