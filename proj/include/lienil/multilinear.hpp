#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lienil/lcs.hpp"

namespace lienil {

/// Multilinear words in x_1..x_N are identified with permutations: the word
/// x_{p(1)}...x_{p(N)} is p. Renaming letters is then left multiplication in
/// the group algebra of S_N, so M_i(A_N)[1,...,1] is a left ideal, and the
/// group algebra splits into one matrix block per partition of N.

/// Standard Young tableaux of a shape; entry k (0-based) holds the (row, column)
/// of the number k+1.
std::vector<std::vector<std::pair<int, int>>> standard_tableaux(const std::vector<int>& shape);

/// Young's seminormal representation of S_N on the tableaux of one shape.
class SeminormalRepresentation {
 public:
  SeminormalRepresentation(std::vector<int> shape, ScalarMode mode);
  ~SeminormalRepresentation();
  SeminormalRepresentation(SeminormalRepresentation&&) noexcept;

  const std::vector<int>& shape() const { return shape_; }
  size_t dimension() const;
  /// Matrix of the permutation p (1-based images), row-major.
  std::vector<std::vector<Scalar>> matrix(const std::vector<int>& permutation) const;

  struct Impl;

 private:
  std::vector<int> shape_;
  std::unique_ptr<Impl> impl_;
};

/// M_i(A_N)[1,...,1] held blockwise: for each shape, the row space spanned by
/// the images of the spanning-set shapes. Requires characteristic 0 or p > N.
class MultilinearIdeal {
 public:
  MultilinearIdeal(int n, int i, ScalarMode mode, SpanningSet set = SpanningSet::kReduced);
  ~MultilinearIdeal();
  MultilinearIdeal(MultilinearIdeal&&) noexcept;

  int n() const { return n_; }
  int i() const { return i_; }
  ScalarMode mode() const { return mode_; }
  /// Number of spanning-set shapes generating the ideal under renaming.
  size_t generators() const { return generators_; }
  /// dim M_i[1,...,1] = sum over shapes of (block dimension) * (row-space rank).
  uint64_t dimension() const;

  struct BlockRank {
    std::vector<int> shape;
    uint64_t block_dimension = 0;  // number of standard tableaux
    uint64_t rank = 0;             // multiplicity of the Specht module in the ideal
  };
  /// One entry per partition of n, in the order of partitions_of(n).
  std::vector<BlockRank> block_ranks() const;

  struct Defect {
    std::vector<int> shape;
    uint64_t excess = 0;  // rank gained by adding the rows of the vector's block
  };
  /// Blocks in which v is not in the ideal; empty iff v is a member.
  std::vector<Defect> defects(const NCPoly& v) const;
  bool contains(const NCPoly& v) const { return defects(v).empty(); }
  /// Index of the first vector outside the ideal, or -1.
  long first_outside(std::span<const NCPoly> vectors) const;

  struct Impl;

 private:
  int n_;
  int i_;
  ScalarMode mode_;
  size_t generators_ = 0;
  std::unique_ptr<Impl> impl_;
};

/// Block ranks of M_i(A_n)[1,...,1] without keeping the echelon forms; memory
/// stays at a few blocks instead of n! entries.
std::vector<MultilinearIdeal::BlockRank> multilinear_block_ranks(int n, int i, ScalarMode mode,
                                                                 SpanningSet set = SpanningSet::kReduced);

/// Partitions of n in lexicographically decreasing order.
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace lienil
