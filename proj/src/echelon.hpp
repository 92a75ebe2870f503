// Field kernels and RREF engines behind RowSpace. Private to the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "lienil/scalar.hpp"

namespace lienil::detail {

/// F_p for p < 2^32 with Barrett reduction of 64-bit products.
struct ModField {
  using Elem = uint64_t;

  explicit ModField(uint64_t prime) : p(prime), barrett(~0ULL / prime) {}

  uint64_t p;
  uint64_t barrett;

  Elem reduce(uint64_t a) const {
    uint64_t q = static_cast<uint64_t>((static_cast<unsigned __int128>(a) * barrett) >> 64);
    uint64_t r = a - q * p;
    while (r >= p) r -= p;
    return r;
  }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  static bool is_zero(const Elem& a) { return a == 0; }
  static bool is_one(const Elem& a) { return a == 1; }
  Elem from_int(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p);
    return static_cast<Elem>(r < 0 ? r + static_cast<int64_t>(p) : r);
  }
  Elem from_scalar(const Scalar& s) const { return s.residue(); }
  Scalar to_scalar(const Elem& e) const {
    return Scalar(ScalarMode::mod(p), static_cast<long>(e));
  }
  Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
  Elem inv(const Elem& a) const { return mod_inverse(a, p); }
  Elem neg(const Elem& a) const { return a == 0 ? 0 : p - a; }
  /// y <- y - c*x
  void submul(Elem& y, const Elem& c, const Elem& x) const { y = reduce(y + (p - c) * x); }
  /// y[0..len) <- y - c*x, dense.
  void axpy_neg(Elem* y, const Elem& c, const Elem* x, size_t len) const {
    const uint64_t nc = p - c;
    for (size_t j = 0; j < len; ++j) y[j] = reduce(y[j] + nc * x[j]);
  }
  void scale(Elem& y, const Elem& c) const { y = reduce(y * c); }
};

struct RationalField {
  using Elem = mpq_class;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static bool is_one(const Elem& a) { return a == 1; }
  Elem from_int(int64_t v) const { return mpq_class(static_cast<long>(v)); }
  Elem from_scalar(const Scalar& s) const { return s.rational(); }
  Scalar to_scalar(const Elem& e) const { return Scalar(ScalarMode::exact(), e); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return 1 / a; }
  Elem neg(const Elem& a) const { return -a; }
  void submul(Elem& y, const Elem& c, const Elem& x) const {
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), c.get_mpq_t(), x.get_mpq_t());
    mpq_sub(y.get_mpq_t(), y.get_mpq_t(), t.get_mpq_t());
  }
  void axpy_neg(Elem* y, const Elem& c, const Elem* x, size_t len) const {
    for (size_t j = 0; j < len; ++j) {
      if (sgn(x[j]) != 0) submul(y[j], c, x[j]);
    }
  }
  void scale(Elem& y, const Elem& c) const { y *= c; }
};

template <class F>
struct SparseVec {
  std::vector<uint32_t> cols;
  std::vector<typename F::Elem> vals;

  size_t size() const { return cols.size(); }
  bool empty() const { return cols.empty(); }
};

/// Per-thread dense scratch for sparse reductions; all entries are zero and
/// unmarked between uses.
template <class F>
struct Scratch {
  std::vector<typename F::Elem> acc;
  std::vector<char> mark;
  std::vector<uint32_t> touched;

  void ensure(size_t n) {
    if (acc.size() < n) {
      acc.resize(n);
      mark.resize(n, 0);
    }
  }
  static Scratch& local() {
    thread_local Scratch s;
    return s;
  }
};

/// Sparse RREF. Rows are stored in insertion order; pivot_of maps a column to
/// the row whose pivot it is.
template <class F>
class SparseEchelon {
 public:
  using Elem = typename F::Elem;
  using Vec = SparseVec<F>;

  SparseEchelon(F field, uint64_t ncols) : f_(std::move(field)), ncols_(ncols), pivot_of_(ncols, -1) {}

  size_t rank() const { return rows_.size(); }
  const F& field() const { return f_; }

  Vec reduce(const Vec& v) const {
    auto& s = Scratch<F>::local();
    s.ensure(ncols_);
    s.touched.clear();
    auto touch = [&](uint32_t c) {
      if (!s.mark[c]) {
        s.mark[c] = 1;
        s.touched.push_back(c);
      }
    };
    for (size_t k = 0; k < v.size(); ++k) {
      s.acc[v.cols[k]] = v.vals[k];
      touch(v.cols[k]);
    }
    for (size_t k = 0; k < v.size(); ++k) {
      int32_t r = pivot_of_[v.cols[k]];
      if (r < 0) continue;
      // RREF: the coefficient at a pivot column is never changed by other rows.
      const Elem coef = v.vals[k];
      const Vec& P = rows_[static_cast<size_t>(r)];
      for (size_t j = 0; j < P.size(); ++j) {
        touch(P.cols[j]);
        f_.submul(s.acc[P.cols[j]], coef, P.vals[j]);
      }
    }
    std::sort(s.touched.begin(), s.touched.end());
    Vec out;
    for (uint32_t c : s.touched) {
      if (!F::is_zero(s.acc[c])) {
        out.cols.push_back(c);
        out.vals.push_back(s.acc[c]);
      }
      s.acc[c] = f_.zero();
      s.mark[c] = 0;
    }
    return out;
  }

  bool insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.empty()) return false;
    Elem inv = f_.inv(r.vals[0]);
    for (auto& x : r.vals) f_.scale(x, inv);
    const uint32_t c0 = r.cols[0];
    for (auto& P : rows_) {
      auto it = std::lower_bound(P.cols.begin(), P.cols.end(), c0);
      if (it == P.cols.end() || *it != c0) continue;
      Elem a = P.vals[static_cast<size_t>(it - P.cols.begin())];
      P = merge(P, a, r);
    }
    pivot_of_[c0] = static_cast<int32_t>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  /// Rows sorted by pivot column.
  std::vector<const Vec*> sorted_rows() const {
    std::vector<const Vec*> out;
    out.reserve(rows_.size());
    for (uint64_t c = 0; c < ncols_; ++c) {
      if (pivot_of_[c] >= 0) out.push_back(&rows_[static_cast<size_t>(pivot_of_[c])]);
    }
    return out;
  }

 private:
  /// P - a*r, dropping cancelled entries.
  Vec merge(const Vec& P, const Elem& a, const Vec& r) const {
    Vec out;
    out.cols.reserve(P.size() + r.size());
    out.vals.reserve(P.size() + r.size());
    size_t i = 0, j = 0;
    while (i < P.size() || j < r.size()) {
      if (j == r.size() || (i < P.size() && P.cols[i] < r.cols[j])) {
        out.cols.push_back(P.cols[i]);
        out.vals.push_back(P.vals[i]);
        ++i;
      } else if (i == P.size() || r.cols[j] < P.cols[i]) {
        Elem x = f_.zero();
        f_.submul(x, a, r.vals[j]);
        out.cols.push_back(r.cols[j]);
        out.vals.push_back(std::move(x));
        ++j;
      } else {
        Elem x = P.vals[i];
        f_.submul(x, a, r.vals[j]);
        if (!F::is_zero(x)) {
          out.cols.push_back(P.cols[i]);
          out.vals.push_back(std::move(x));
        }
        ++i;
        ++j;
      }
    }
    return out;
  }

  F f_;
  uint64_t ncols_;
  std::vector<Vec> rows_;
  std::vector<int32_t> pivot_of_;
};

/// Dense RREF for narrow components.
template <class F>
class DenseEchelon {
 public:
  using Elem = typename F::Elem;
  using Vec = SparseVec<F>;

  DenseEchelon(F field, uint64_t ncols) : f_(std::move(field)), ncols_(ncols), pivot_of_(ncols, -1) {}

  size_t rank() const { return rows_.size(); }
  const F& field() const { return f_; }

  std::vector<Elem> reduce_dense(const Vec& v) const {
    std::vector<Elem> acc(ncols_, f_.zero());
    for (size_t k = 0; k < v.size(); ++k) acc[v.cols[k]] = v.vals[k];
    for (size_t k = 0; k < v.size(); ++k) {
      int32_t r = pivot_of_[v.cols[k]];
      if (r < 0) continue;
      const uint32_t c = v.cols[k];
      const Elem coef = v.vals[k];
      const auto& P = rows_[static_cast<size_t>(r)];
      f_.axpy_neg(acc.data() + c, coef, P.data() + c, ncols_ - c);
    }
    return acc;
  }

  Vec reduce(const Vec& v) const {
    auto acc = reduce_dense(v);
    Vec out;
    for (uint32_t c = 0; c < ncols_; ++c) {
      if (!F::is_zero(acc[c])) {
        out.cols.push_back(c);
        out.vals.push_back(acc[c]);
      }
    }
    return out;
  }

  bool insert(const Vec& v) {
    auto acc = reduce_dense(v);
    uint32_t c0 = 0;
    while (c0 < ncols_ && F::is_zero(acc[c0])) ++c0;
    if (c0 == ncols_) return false;
    Elem inv = f_.inv(acc[c0]);
    for (uint64_t c = c0; c < ncols_; ++c) {
      if (!F::is_zero(acc[c])) f_.scale(acc[c], inv);
    }
    for (auto& P : rows_) {
      if (F::is_zero(P[c0])) continue;
      Elem a = P[c0];
      f_.axpy_neg(P.data() + c0, a, acc.data() + c0, ncols_ - c0);
    }
    pivot_of_[c0] = static_cast<int32_t>(rows_.size());
    rows_.push_back(std::move(acc));
    return true;
  }

  std::vector<Vec> sorted_rows() const {
    std::vector<Vec> out;
    for (uint64_t c = 0; c < ncols_; ++c) {
      if (pivot_of_[c] < 0) continue;
      const auto& P = rows_[static_cast<size_t>(pivot_of_[c])];
      Vec v;
      for (uint32_t j = 0; j < ncols_; ++j) {
        if (!F::is_zero(P[j])) {
          v.cols.push_back(j);
          v.vals.push_back(P[j]);
        }
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  F f_;
  uint64_t ncols_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<int32_t> pivot_of_;
};

}  // namespace lienil::detail
