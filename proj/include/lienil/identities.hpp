#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lienil/lcs.hpp"
#include "lienil/multilinear.hpp"

namespace lienil {

/// The product of left-normed brackets [..[x_1,x_2],..,x_m] * [..[x_{m+1},..],..,x_{m+l}] in A_{m+l}.
NCPoly null_pair_element(int m, int l, ScalarMode mode = ScalarMode::exact());

enum class NullPairMethod {
  kBlocks,   // matrix blocks of the symmetric group algebra (default)
  kGeneric,  // full echelon form of M_{m+l-1}[1,...,1]
};

struct NullPairOptions {
  NullPairMethod method = NullPairMethod::kBlocks;
  uint64_t max_columns = kDefaultMaxColumns;
  /// Test (min, max) rather than the order given.
  bool canonical_order = true;
  LcsStore* store = nullptr;  // generic method only; default_store() when null
};

struct ModeVerdict {
  ScalarMode mode;
  bool is_null = false;
  uint64_t ideal_dimension = 0;  // dim M_{m+l-1}[1,...,1]
  std::vector<MultilinearIdeal::Defect> witness;  // blocks where the element escapes
  double seconds = 0;
};

struct PairReport {
  int m = 0;
  int l = 0;
  bool is_null = false;
  /// All modes gave the same verdict.
  bool consensus = true;
  /// "m=1" / "l=1" when no linear algebra was needed.
  std::string shortcut;
  std::string method;
  uint64_t component_dimension = 0;  // (m+l)!
  uint64_t spanning_shapes = 0;
  std::vector<ModeVerdict> verdicts;
  double elapsed_seconds = 0;

  /// Null iff m or l is odd.
  bool parity_prediction() const { return m % 2 == 1 || l % 2 == 1; }
};

/// Throws ResourceLimitError when (m+l)! exceeds options.max_columns.
PairReport check_null_pair(int m, int l, const std::vector<ScalarMode>& modes, const NullPairOptions& options = {});
PairReport check_null_pair(int m, int l, ScalarMode mode);

struct ScanReport {
  int max_sum = 0;
  std::vector<PairReport> pairs;  // (m, l), m <= l, ordered by m + l then m
  std::vector<std::pair<int, int>> not_null;
  std::vector<std::pair<int, int>> disagreements;  // verdict differs from the parity prediction
  bool consensus = true;
};

ScanReport scan_null_pairs(int max_sum, const std::vector<ScalarMode>& modes, const NullPairOptions& options = {});

/// S(i,j,k,l,m) = [x_i,x_j][x_k,[x_l,x_m]] + [x_k,x_j][x_i,[x_l,x_m]] in A_n.
NCPoly s_element(int n, int i, int j, int k, int l, int m, ScalarMode mode = ScalarMode::exact());

/// One summand c * S(a_1..a_5) of R, with a_t given as positions 0..4 into (i,j,k,l,m).
struct RTerm {
  long num;
  long den;
  std::array<int, 5> args;
};
const std::vector<RTerm>& r_terms();

/// R(i,j,k,l,m) = sum of the 13 S-terms of r_terms().
NCPoly r_element(int n, int i, int j, int k, int l, int m, ScalarMode mode = ScalarMode::exact());

/// [a,b][c,d] + [a,d][c,b] - ([[ac,b],d] + a[d,[c,b]] - [[a,b],d]c); zero in any free algebra.
NCPoly four_term_defect(const NCPoly& a, const NCPoly& b, const NCPoly& c, const NCPoly& d);
bool verify_four_term_identity(const NCPoly& a, const NCPoly& b, const NCPoly& c, const NCPoly& d);

/// [x_i,x_j][x_k,[x_l,x_m]] == (R(i,j,m,l,k) - R(i,j,l,m,k)) / 3 in A_n with
/// n = max(5, largest index). Rejects characteristic 3.
bool verify_r_identity(int i, int j, int k, int l, int m, ScalarMode mode = ScalarMode::exact());

struct ContainmentReport {
  bool holds = true;
  int target = 0;           // index of the ideal tested against
  uint64_t products = 0;    // vectors tested
  uint64_t splits = 0;      // multidegree decompositions visited
  std::string method;       // "blocks" or "generic"
  std::optional<std::string> witness;  // first vector outside the target, if any
};

/// Products of basis vectors of M_m[alpha] and M_l[beta], alpha + beta = delta,
/// tested against M_target[delta]; target defaults to m + l - 2.
ContainmentReport check_gupta_levin(int m, int l, const MultiDegree& delta, ScalarMode mode,
                                    std::optional<int> target = std::nullopt, LcsStore& store = default_store());

/// [[a,b],c] for basis vectors of M_i[alpha], M_j[beta], M_k[gamma] with
/// alpha + beta + gamma = delta, tested against M_{max(1, i+j+k-3)}[delta].
ContainmentReport check_triple_bracket(int i, int j, int k, const MultiDegree& delta, ScalarMode mode,
                                       LcsStore& store = default_store());

}  // namespace lienil
