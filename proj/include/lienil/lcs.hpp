#pragma once

#include <cstdint>
#include <filesystem>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "lienil/ncpoly.hpp"
#include "lienil/span.hpp"

namespace lienil {

/// Families of elements u*[e_1,...,e_i]*v (left-normed bracket, u and v words)
/// used to span M_i[delta].
///
/// kWordEntries takes every nonempty word for every entry; it is the
/// definition and serves as the oracle. kReduced fixes e_2 and e_i to single
/// generators and keeps e_1, e_3..e_{i-1} as words: the last entry can be
/// split off into u or v inside the ideal, and [e_1,e_2] runs over [A,A],
/// which is spanned by the [w, x_a]. For i = 2 all entries are generators.
/// kLetterEntries makes every entry a generator; for i >= 3 this spans only
/// the ideal generated by brackets of generators, a proper subspace of M_i.
enum class SpanningSet { kReduced, kWordEntries, kLetterEntries };

/// Segment lengths (|u|, |e_1|, ..., |e_i|, |v|) admitted by a spanning set
/// for words of length len.
std::vector<std::vector<int>> segment_shapes(int len, int i, SpanningSet set);

/// u*[e_1..e_i]*v obtained by cutting `word` according to `shape`, as signed words.
std::vector<std::pair<Word, int>> expand_shape(const Word& word, const std::vector<int>& shape);

/// All spanning elements of M_i(A_n)[delta] of the given family (default: the
/// reduced family whose span is M_i[delta]). Empty when |delta| < i.
std::vector<NCPoly> m_spanning_generators(int n, int i, const MultiDegree& delta,
                                          ScalarMode mode = ScalarMode::exact(),
                                          SpanningSet set = SpanningSet::kReduced);

/// All [w_1, ..., w_i] (left-normed) with nonempty words w_j of total
/// multidegree delta. i = 1 gives the words themselves.
std::vector<NCPoly> l_spanning_monomial_entries(int n, int i, const MultiDegree& delta,
                                                ScalarMode mode = ScalarMode::exact());

/// Same as m_spanning_generators, as integer rows over the component.
std::vector<IntRow> m_rows(const ComponentIndex& component, int i, SpanningSet set);

/// Left-normed bracket of words, expanded to signed words.
std::vector<std::pair<Word, int>> expand_word_bracket(const std::vector<Word>& entries);

inline constexpr uint64_t kDefaultMaxColumns = 3628800;  // 10!

/// How q_weights obtains a whole degree N.
///
/// kEchelon reduces every component M_i[delta] (up to letter permutation).
/// kBlocks uses that M_i is stable under linear substitutions: by Schur-Weyl
/// duality dim M_i(A_n)[delta] = sum over lambda of r_lambda * K(lambda, delta),
/// where r_lambda is the multiplicity of the Specht module S^lambda in the
/// multilinear piece M_i(A_N)[1,...,1]. Needs characteristic 0 or p > N, N <= 12.
/// kAuto picks kBlocks when the largest component of degree N exceeds
/// kBlockMethodColumns.
enum class QMethod { kAuto, kEchelon, kBlocks };
inline constexpr uint64_t kBlockMethodColumns = 20000;

/// Multiplicity of S^lambda in Q_{N,i}[1,...,1] under letter renaming, keyed by lambda.
using SpechtMultiplicities = std::map<std::vector<int>, uint64_t>;

struct LcsOptions {
  std::optional<std::filesystem::path> cache_dir;
  uint64_t max_columns = kDefaultMaxColumns;
  int jobs = 1;
  /// Compute q_dimension on the sorted multidegree only (letter renaming is an
  /// automorphism preserving every M_i).
  bool exploit_symmetry = true;
  QMethod q_method = QMethod::kAuto;
};

/// A computed graded piece M_i(A_n)[delta].
struct LcsComponent {
  int n = 0;
  int i = 0;
  MultiDegree delta;
  std::shared_ptr<const SpanBasis> basis;
};

/// Memo store of M_i[delta] bases keyed by (n, i, delta, mode), optionally
/// persisted to a cache directory. Safe for concurrent use.
class LcsStore {
 public:
  explicit LcsStore(LcsOptions options = {});

  const LcsOptions& options() const { return options_; }
  void set_options(LcsOptions options);

  LcsComponent component(int n, int i, const MultiDegree& delta, ScalarMode mode);
  /// Memoized block ranks of the multilinear piece of degree N, as quotient multiplicities.
  SpechtMultiplicities quotient_specht(int N, int i, ScalarMode mode);
  size_t size() const;
  void clear();

  /// File name used for the on-disk cache entry of one component.
  static std::string cache_file_name(int n, int i, const MultiDegree& delta, ScalarMode mode);

 private:
  using Key = std::tuple<int, int, std::vector<int>, uint64_t>;
  using Value = std::shared_ptr<const SpanBasis>;

  Value compute(int n, int i, const MultiDegree& delta, ScalarMode mode) const;

  LcsOptions options_;
  mutable std::mutex mutex_;
  std::map<Key, std::shared_future<Value>> memo_;
  std::map<std::tuple<int, int, uint64_t>, SpechtMultiplicities> specht_memo_;
};

/// Process-wide store used when none is passed explicitly.
LcsStore& default_store();

/// Every homogeneous component of p lies in M_i(A_n).
bool member_of_m(const NCPoly& p, int i, ScalarMode mode, LcsStore& store = default_store());
/// dim A_n[delta] - rank M_i[delta]. For i = 1 the quotient is zero.
uint64_t q_dimension(int n, int i, const MultiDegree& delta, ScalarMode mode, LcsStore& store = default_store());

struct HilbertSeries {
  int max_degree = 0;
  std::vector<uint64_t> coefficients;  // index = total degree
};

HilbertSeries hilbert_q(int n, int i, int max_degree, ScalarMode mode, LcsStore& store = default_store());

/// Multidegree -> multiplicity; a GL(n) character truncated at max_degree.
/// Only nonzero entries are stored.
struct WeightTable {
  int n = 0;
  int max_degree = 0;
  std::map<MultiDegree, int64_t> entries;

  int64_t at(const MultiDegree& nu) const;
  int64_t total() const;
  /// Sum of entries per total degree 0..max_degree.
  std::vector<int64_t> by_degree() const;
  /// Highest total degree carrying a nonzero entry, -1 for the empty table.
  int top_degree() const;
  bool is_symmetric() const;
  void set(const MultiDegree& nu, int64_t value);
  bool operator==(const WeightTable& o) const = default;
};

/// Method kAuto resolves to for degree N in n letters.
QMethod resolve_q_method(int n, int N, ScalarMode mode, const LcsOptions& options);

/// dim Q_{n,i}[delta] for every |delta| <= max_degree.
WeightTable q_weights(int n, int i, int max_degree, ScalarMode mode, LcsStore& store = default_store());

/// Weights of Lambda_{n,i}: the multigraded Q-series times prod_j (1 - t_j).
/// Throws InconsistencyError on a negative entry.
WeightTable lambda_weights(int n, int i, int max_degree, ScalarMode mode, LcsStore& store = default_store());

struct LambdaDim {
  int64_t dimension = 0;
  bool stabilized = false;
  int max_degree = 0;
  int window = 0;
  int top_degree = -1;
};

/// Number of consecutive vanishing top degrees (n + i) required before
/// Lambda_{n,i} is reported as stabilized. Finiteness is known but no top
/// degree bound is, so this is a falsifiable heuristic, not a proof.
int stabilization_window(int n, int i);
/// Known top degree of Lambda_{n,i} for i <= 4 (a guess beyond) plus the window.
int default_max_degree(int n, int i);

LambdaDim lambda_dim(int n, int i, int max_degree, ScalarMode mode, LcsStore& store = default_store());
LambdaDim lambda_dim_of(const WeightTable& lambda, int i);

}  // namespace lienil
