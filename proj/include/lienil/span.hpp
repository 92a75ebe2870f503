#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "lienil/ncpoly.hpp"

namespace lienil {

/// Coordinatization of the multidegree-delta component of A_n: column k is the
/// k-th word of multidegree delta in deglex order.
class ComponentIndex {
 public:
  explicit ComponentIndex(MultiDegree delta);

  int n() const { return delta_.n(); }
  const MultiDegree& delta() const { return delta_; }
  uint64_t dimension() const { return dim_; }

  /// Rank of w among the words of multidegree delta. Throws if w has another degree.
  uint32_t index_of(const Word& w) const;
  Word word_at(uint64_t index) const;

  bool operator==(const ComponentIndex& o) const { return delta_ == o.delta_; }

 private:
  MultiDegree delta_;
  uint64_t dim_;
};

using IntRow = std::vector<std::pair<uint32_t, int64_t>>;
using ScalarRow = std::vector<std::pair<uint32_t, Scalar>>;

enum class Storage { kAuto, kSparse, kDense };

/// Columns at or below this count use dense row storage under Storage::kAuto.
inline constexpr uint64_t kDenseColumnLimit = 512;

/// Incrementally maintained reduced row echelon form over Q or F_p.
///
/// Rows are kept fully reduced (each pivot column is zero in every other row)
/// with unit pivots, so the stored rows are the canonical RREF of the span.
class RowSpace {
 public:
  RowSpace(ScalarMode mode, uint64_t ncols, Storage storage = Storage::kAuto);
  ~RowSpace();
  RowSpace(RowSpace&&) noexcept;
  RowSpace& operator=(RowSpace&&) noexcept;

  ScalarMode mode() const { return mode_; }
  uint64_t ncols() const { return ncols_; }
  size_t rank() const;
  bool full() const { return rank() == ncols_; }
  bool dense() const;

  /// Inserts one row (entries need not be sorted; duplicates are summed).
  /// Returns true when the rank grew.
  bool insert(const IntRow& row);
  bool insert(const ScalarRow& row);
  /// Inserts a batch in increasing nonzero-count order; stops once full.
  void insert_all(std::vector<IntRow> rows);

  bool contains(const IntRow& row) const;
  bool contains(const ScalarRow& row) const;
  /// Remainder of row after reduction against the stored RREF.
  ScalarRow residual(const ScalarRow& row) const;

  /// RREF rows ordered by pivot column.
  std::vector<ScalarRow> rows() const;
  std::vector<uint32_t> pivots() const;

  struct Impl;

 private:
  ScalarMode mode_;
  uint64_t ncols_;
  std::unique_ptr<Impl> impl_;
};

/// Echelonized basis of a subspace of one multidegree component.
class SpanBasis {
 public:
  SpanBasis(ComponentIndex component, ScalarMode mode, Storage storage = Storage::kAuto);

  const ComponentIndex& component() const { return *component_; }
  ScalarMode mode() const { return mode_; }
  size_t rank() const { return space_->rank(); }
  const RowSpace& space() const { return *space_; }

  std::vector<uint32_t> pivot_columns() const { return space_->pivots(); }
  /// RREF rows as polynomials, ordered by pivot.
  std::vector<NCPoly> rows() const;

  bool contains(const NCPoly& v) const;
  NCPoly reduce(const NCPoly& v) const;

  /// Converts a homogeneous polynomial of this component's degree to a row.
  ScalarRow to_row(const NCPoly& v) const;
  NCPoly from_row(const ScalarRow& row) const;

  /// Builder used while the basis is being assembled.
  void insert_rows(std::vector<IntRow> rows);
  void insert_polys(std::span<const NCPoly> vectors);

  /// Sparse text format (see docs/FORMATS.md): header lines then one
  /// `pivot col:coeff ...` line per row.
  void write(std::ostream& out) const;
  static SpanBasis read(std::istream& in, const ComponentIndex& component, ScalarMode mode);

  static constexpr int kFormatVersion = 1;

 private:
  std::shared_ptr<const ComponentIndex> component_;
  ScalarMode mode_;
  std::shared_ptr<RowSpace> space_;
};

/// Echelonizes vectors of multidegree delta (zero vectors allowed).
SpanBasis echelonize(std::span<const NCPoly> vectors, const MultiDegree& delta, ScalarMode mode,
                     Storage storage = Storage::kAuto);
bool contains(const SpanBasis& basis, const NCPoly& v);
/// Equal rank and mutual containment; component and mode must agree.
bool spans_equal(const SpanBasis& a, const SpanBasis& b);

}  // namespace lienil
