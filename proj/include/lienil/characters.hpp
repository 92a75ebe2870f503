#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lienil/lcs.hpp"

namespace lienil {

/// Weakly decreasing positive parts; trailing zeros are dropped on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  /// The parts padded with zeros to n entries.
  MultiDegree as_weight(int n) const;
  /// "(2,1)"
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Weight multiplicities of the irreducible GL(n)-module F_lambda: the number
/// of semistandard tableaux of shape lambda with entries <= n and each content.
WeightTable kostka_weights(const Partition& lambda, int n);

/// dim F_lambda(n) by the hook-content formula.
uint64_t weyl_dimension(const Partition& lambda, int n);

/// Multiplicity of each irreducible constituent.
struct SchurDecomposition {
  std::map<Partition, int64_t> multiplicities;

  /// "1 * s(2,1) + 1 * s(2,2)", "0" when empty.
  std::string to_string() const;
  bool operator==(const SchurDecomposition&) const = default;
};

/// Greedy peeling by the lexicographically greatest dominant weight. Throws
/// std::invalid_argument for a table that is not S_n-symmetric and
/// InconsistencyError when a negative multiplicity appears.
SchurDecomposition schur_decompose(const WeightTable& weights);

/// Sum of N_lambda * kostka_weights(lambda), truncated at max_degree.
WeightTable character_of(const SchurDecomposition& decomposition, int n, int max_degree);

/// Weights of K_{n,i} = ker(Lambda_{n,i+1} -> Lambda_{n,i}).
struct KernelTable {
  int n = 0;
  int i = 0;
  int max_degree = 0;
  WeightTable weights;
  LambdaDim upper;  // Lambda_{n,i+1}
  LambdaDim lower;  // Lambda_{n,i}
};

/// Pointwise difference of the Lambda tables at truncation max_degree
/// (default_max_degree(n, i+1) when absent). Throws InconsistencyError when
/// either table has not stabilized or an entry is negative.
KernelTable k_weights(int n, int i, ScalarMode mode, std::optional<int> max_degree = std::nullopt,
                      LcsStore& store = default_store());

struct CorollaryReport {
  int n = 0;
  KernelTable kernel;
  SchurDecomposition decomposition;
  SchurDecomposition expected;  // s(2,1) + s(2,2)
  bool passed = false;
};

/// K_{n,3} decomposes as F_(2,1) + F_(2,2).
CorollaryReport verify_corollary_k3(int n, ScalarMode mode, std::optional<int> max_degree = std::nullopt,
                                    LcsStore& store = default_store());

}  // namespace lienil
