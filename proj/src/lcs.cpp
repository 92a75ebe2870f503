#include "lienil/lcs.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>

#include "lienil/characters.hpp"
#include "lienil/multilinear.hpp"
#include "lienil/parallel.hpp"

namespace lienil {

namespace {

/// Smallest and largest admissible length of entry k (0-based) of an i-fold bracket.
std::pair<int, int> entry_bounds(int k, int i, SpanningSet set, int len) {
  switch (set) {
    case SpanningSet::kWordEntries:
      return {1, len};
    case SpanningSet::kLetterEntries:
      return {1, 1};
    case SpanningSet::kReduced:
      if (i <= 2 || k == 1 || k == i - 1) return {1, 1};
      return {1, len};
  }
  return {1, len};
}

NCPoly poly_from_terms(int n, ScalarMode mode, const std::vector<std::pair<Word, int>>& terms) {
  NCPoly p(n, mode);
  for (const auto& [w, s] : terms) p.add_term(w, Scalar(mode, s));
  return p;
}

IntRow row_from_terms(const ComponentIndex& comp, const std::vector<std::pair<Word, int>>& terms) {
  IntRow row;
  row.reserve(terms.size());
  for (const auto& [w, s] : terms) row.emplace_back(comp.index_of(w), s);
  return row;
}

template <class Emit>
void for_each_spanning_element(const MultiDegree& delta, int i, SpanningSet set, Emit&& emit) {
  const int len = delta.total();
  if (i < 1 || len < i) return;
  const auto shapes = segment_shapes(len, i, set);
  for (const auto& o : words_of_degree(delta)) {
    for (const auto& shape : shapes) emit(expand_shape(o, shape));
  }
}

}  // namespace

std::vector<std::vector<int>> segment_shapes(int len, int i, SpanningSet set) {
  std::vector<std::vector<int>> out;
  if (i < 1 || len < i) return out;
  std::vector<int> shape(static_cast<size_t>(i + 2), 0);
  // Segments 0 and i+1 are u and v; 1..i are the bracket entries.
  std::function<void(int, int)> rec = [&](int seg, int left) {
    if (seg == i + 1) {
      shape[static_cast<size_t>(seg)] = left;
      out.push_back(shape);
      return;
    }
    auto [lo, hi] = seg == 0 ? std::pair<int, int>{0, left} : entry_bounds(seg - 1, i, set, len);
    int later = 0;  // minimal total length of the entries after this segment
    for (int k = seg; k < i; ++k) later += entry_bounds(k, i, set, len).first;
    for (int s = lo; s <= std::min(hi, left - later); ++s) {
      shape[static_cast<size_t>(seg)] = s;
      rec(seg + 1, left - s);
    }
  };
  rec(0, len);
  return out;
}

std::vector<std::pair<Word, int>> expand_word_bracket(const std::vector<Word>& entries) {
  std::vector<std::pair<Word, int>> cur;
  if (entries.empty()) return cur;
  cur.emplace_back(entries.front(), 1);
  for (size_t k = 1; k < entries.size(); ++k) {
    std::vector<std::pair<Word, int>> next;
    next.reserve(cur.size() * 2);
    for (const auto& [w, s] : cur) {
      next.emplace_back(w * entries[k], s);
      next.emplace_back(entries[k] * w, -s);
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::pair<Word, int>> expand_shape(const Word& word, const std::vector<int>& shape) {
  const std::string& b = word.bytes();
  size_t pos = 0;
  auto take = [&](int n) {
    std::string s = b.substr(pos, static_cast<size_t>(n));
    pos += static_cast<size_t>(n);
    return s;
  };
  const std::string u = take(shape.front());
  std::vector<Word> entries;
  for (size_t k = 1; k + 1 < shape.size(); ++k) entries.push_back(Word::from_bytes(take(shape[k])));
  const std::string v = take(shape.back());
  if (pos != b.size()) throw std::invalid_argument("shape does not match word length");
  auto terms = expand_word_bracket(entries);
  for (auto& [w, s] : terms) w = Word::from_bytes(u + w.bytes() + v);
  return terms;
}

std::vector<NCPoly> m_spanning_generators(int n, int i, const MultiDegree& delta, ScalarMode mode, SpanningSet set) {
  if (delta.n() != n) throw std::invalid_argument("multidegree length must equal n");
  if (i < 2) throw std::invalid_argument("m_spanning_generators requires i >= 2");
  std::vector<NCPoly> out;
  for_each_spanning_element(delta, i, set, [&](const auto& terms) {
    NCPoly p = poly_from_terms(n, mode, terms);
    if (!p.is_zero()) out.push_back(std::move(p));
  });
  return out;
}

std::vector<NCPoly> l_spanning_monomial_entries(int n, int i, const MultiDegree& delta, ScalarMode mode) {
  if (delta.n() != n) throw std::invalid_argument("multidegree length must equal n");
  if (i < 1) throw std::invalid_argument("l_spanning_monomial_entries requires i >= 1");
  std::vector<NCPoly> out;
  const int len = delta.total();
  for (const auto& shape : segment_shapes(len, i, SpanningSet::kWordEntries)) {
    if (shape.front() != 0 || shape.back() != 0) continue;
    for (const auto& o : words_of_degree(delta)) {
      NCPoly p = poly_from_terms(n, mode, expand_shape(o, shape));
      if (!p.is_zero()) out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<IntRow> m_rows(const ComponentIndex& component, int i, SpanningSet set) {
  std::vector<IntRow> rows;
  for_each_spanning_element(component.delta(), i, set,
                            [&](const auto& terms) { rows.push_back(row_from_terms(component, terms)); });
  return rows;
}

// ---------------------------------------------------------------------------
// LcsStore

LcsStore::LcsStore(LcsOptions options) : options_(std::move(options)) {}

void LcsStore::set_options(LcsOptions options) {
  std::lock_guard lock(mutex_);
  options_ = std::move(options);
}

size_t LcsStore::size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

void LcsStore::clear() {
  std::lock_guard lock(mutex_);
  memo_.clear();
  specht_memo_.clear();
}

SpechtMultiplicities LcsStore::quotient_specht(int N, int i, ScalarMode mode) {
  const auto key = std::tuple{N, i, mode.prime()};
  {
    std::lock_guard lock(mutex_);
    if (auto it = specht_memo_.find(key); it != specht_memo_.end()) return it->second;
  }
  SpechtMultiplicities out;
  for (const auto& b : multilinear_block_ranks(N, i, mode)) out[b.shape] = b.block_dimension - b.rank;
  std::lock_guard lock(mutex_);
  specht_memo_[key] = out;
  return out;
}

std::string LcsStore::cache_file_name(int n, int i, const MultiDegree& delta, ScalarMode mode) {
  std::string name = "m-v" + std::to_string(SpanBasis::kFormatVersion) + "-n" + std::to_string(n) + "-i" +
                     std::to_string(i) + "-d";
  for (int k = 0; k < delta.n(); ++k) {
    if (k) name += '_';
    name += std::to_string(delta[k]);
  }
  return name + "-" + mode.tag() + ".span";
}

LcsStore::Value LcsStore::compute(int n, int i, const MultiDegree& delta, ScalarMode mode) const {
  ComponentIndex comp(delta);
  if (comp.dimension() > options_.max_columns) {
    throw ResourceLimitError("component " + delta.to_string() + " has " + std::to_string(comp.dimension()) +
                             " columns, above the limit of " + std::to_string(options_.max_columns));
  }
  std::optional<std::filesystem::path> path;
  if (options_.cache_dir) {
    path = *options_.cache_dir / cache_file_name(n, i, delta, mode);
    std::ifstream in(*path);
    if (in) {
      try {
        return std::make_shared<const SpanBasis>(SpanBasis::read(in, comp, mode));
      } catch (const std::runtime_error&) {
        // Stale or damaged entry: recompute and overwrite below.
      }
    }
  }
  auto basis = std::make_shared<SpanBasis>(comp, mode);
  if (i <= 1) {
    std::vector<IntRow> unit;
    unit.reserve(comp.dimension());
    for (uint32_t c = 0; c < comp.dimension(); ++c) unit.push_back({{c, 1}});
    basis->insert_rows(std::move(unit));
  } else if (delta.total() >= i) {
    basis->insert_rows(m_rows(comp, i, SpanningSet::kReduced));
  }
  if (path) {
    std::filesystem::create_directories(path->parent_path());
    auto tmp = *path;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
      std::ofstream out(tmp);
      basis->write(out);
    }
    std::filesystem::rename(tmp, *path);
  }
  return basis;
}

LcsComponent LcsStore::component(int n, int i, const MultiDegree& delta, ScalarMode mode) {
  if (delta.n() != n) throw std::invalid_argument("multidegree length must equal n");
  if (i < 1) throw std::invalid_argument("series index must be >= 1");
  Key key{n, i, delta.exponents(), mode.prime()};
  std::promise<Value> promise;
  std::shared_future<Value> future;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end()) {
      future = promise.get_future().share();
      memo_.emplace(key, future);
      owner = true;
    } else {
      future = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(compute(n, i, delta, mode));
    } catch (...) {
      {
        std::lock_guard lock(mutex_);
        memo_.erase(key);
      }
      promise.set_exception(std::current_exception());
    }
  }
  return LcsComponent{n, i, delta, future.get()};
}

LcsStore& default_store() {
  static LcsStore store;
  return store;
}

// ---------------------------------------------------------------------------

bool member_of_m(const NCPoly& p, int i, ScalarMode mode, LcsStore& store) {
  if (p.mode() != mode) throw ModeMismatch("member_of_m: polynomial mode differs from requested mode");
  for (const auto& [delta, comp] : homogeneous_components(p)) {
    if (!store.component(p.n(), i, delta, mode).basis->contains(comp)) return false;
  }
  return true;
}

uint64_t q_dimension(int n, int i, const MultiDegree& delta, ScalarMode mode, LcsStore& store) {
  if (delta.n() != n) throw std::invalid_argument("multidegree length must equal n");
  if (i <= 1) return 0;
  if (delta.total() < i) return multinomial(delta);
  const MultiDegree key = store.options().exploit_symmetry ? delta.sorted_descending() : delta;
  auto comp = store.component(n, i, key, mode);
  return comp.basis->component().dimension() - comp.basis->rank();
}

HilbertSeries hilbert_q(int n, int i, int max_degree, ScalarMode mode, LcsStore& store) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  WeightTable q = q_weights(n, i, max_degree, mode, store);
  HilbertSeries h;
  h.max_degree = max_degree;
  for (int64_t c : q.by_degree()) h.coefficients.push_back(static_cast<uint64_t>(c));
  return h;
}

int64_t WeightTable::at(const MultiDegree& nu) const {
  auto it = entries.find(nu);
  return it == entries.end() ? 0 : it->second;
}

int64_t WeightTable::total() const {
  int64_t t = 0;
  for (const auto& [nu, m] : entries) t += m;
  return t;
}

std::vector<int64_t> WeightTable::by_degree() const {
  std::vector<int64_t> out(static_cast<size_t>(max_degree + 1), 0);
  for (const auto& [nu, m] : entries) {
    if (nu.total() <= max_degree) out[static_cast<size_t>(nu.total())] += m;
  }
  return out;
}

int WeightTable::top_degree() const {
  int top = -1;
  for (const auto& [nu, m] : entries) {
    if (m != 0) top = std::max(top, nu.total());
  }
  return top;
}

bool WeightTable::is_symmetric() const {
  for (const auto& [nu, m] : entries) {
    std::vector<int> e = nu.exponents();
    std::sort(e.begin(), e.end());
    do {
      if (at(MultiDegree(e)) != m) return false;
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return true;
}

void WeightTable::set(const MultiDegree& nu, int64_t value) {
  if (value == 0) {
    entries.erase(nu);
  } else {
    entries[nu] = value;
  }
}

QMethod resolve_q_method(int n, int N, ScalarMode mode, const LcsOptions& options) {
  if (options.q_method != QMethod::kAuto) return options.q_method;
  if (N > 12 || (!mode.is_exact() && mode.prime() <= static_cast<uint64_t>(N))) return QMethod::kEchelon;
  // The most balanced multidegree has the most words.
  std::vector<int> e(static_cast<size_t>(n), N / n);
  for (int k = 0; k < N % n; ++k) ++e[static_cast<size_t>(k)];
  return multinomial(MultiDegree(e)) > kBlockMethodColumns ? QMethod::kBlocks : QMethod::kEchelon;
}

WeightTable q_weights(int n, int i, int max_degree, ScalarMode mode, LcsStore& store) {
  WeightTable table{n, max_degree, {}};
  std::vector<MultiDegree> all;
  for (int d = 0; d <= max_degree; ++d) {
    if (i >= 2 && d >= i && resolve_q_method(n, d, mode, store.options()) == QMethod::kBlocks) {
      for (const auto& [shape, mult] : store.quotient_specht(d, i, mode)) {
        if (mult == 0 || static_cast<int>(shape.size()) > n) continue;
        for (const auto& [nu, k] : kostka_weights(Partition(shape), n).entries) {
          table.set(nu, table.at(nu) + static_cast<int64_t>(mult) * k);
        }
      }
      continue;
    }
    for (auto& delta : multidegrees_of_total(n, d)) all.push_back(std::move(delta));
  }
  std::vector<MultiDegree> work;
  if (store.options().exploit_symmetry) {
    std::set<MultiDegree> uniq;
    for (const auto& delta : all) uniq.insert(delta.sorted_descending());
    work.assign(uniq.begin(), uniq.end());
  } else {
    work = all;
  }
  // Largest components first so parallel runs finish together.
  std::stable_sort(work.begin(), work.end(),
                   [](const MultiDegree& a, const MultiDegree& b) { return multinomial(a) > multinomial(b); });
  std::vector<uint64_t> dims(work.size());
  parallel_for(work.size(), store.options().jobs,
               [&](size_t k) { dims[k] = q_dimension(n, i, work[k], mode, store); });
  std::map<MultiDegree, uint64_t> by_key;
  for (size_t k = 0; k < work.size(); ++k) by_key[work[k]] = dims[k];
  for (const auto& delta : all) {
    const MultiDegree key = store.options().exploit_symmetry ? delta.sorted_descending() : delta;
    table.set(delta, static_cast<int64_t>(by_key.at(key)));
  }
  return table;
}

WeightTable lambda_weights(int n, int i, int max_degree, ScalarMode mode, LcsStore& store) {
  if (i < 2) throw std::invalid_argument("lambda_weights requires i >= 2");
  WeightTable q = q_weights(n, i, max_degree, mode, store);
  WeightTable lambda{n, max_degree, {}};
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& nu : multidegrees_of_total(n, d)) {
      std::vector<int> support;
      for (int j = 0; j < n; ++j) {
        if (nu[j] > 0) support.push_back(j);
      }
      int64_t value = 0;
      for (uint32_t mask = 0; mask < (1U << support.size()); ++mask) {
        std::vector<int> e = nu.exponents();
        int sign = 1;
        for (size_t b = 0; b < support.size(); ++b) {
          if (mask & (1U << b)) {
            --e[static_cast<size_t>(support[b])];
            sign = -sign;
          }
        }
        value += sign * q.at(MultiDegree(e));
      }
      if (value < 0) {
        throw InconsistencyError("negative Lambda weight " + std::to_string(value) + " at " + nu.to_string() +
                                 " (n=" + std::to_string(n) + ", i=" + std::to_string(i) + ")");
      }
      lambda.set(nu, value);
    }
  }
  if (lambda.at(MultiDegree(n)) != 1) throw InconsistencyError("Lambda[0] is not one-dimensional");
  return lambda;
}

int stabilization_window(int n, int i) { return n + i; }

int default_max_degree(int n, int i) {
  const int even_top = 2 * (n / 2);
  int top = 0;
  if (i == 3) {
    top = even_top;
  } else if (i == 4) {
    top = std::max(4, even_top);
  } else if (i > 4) {
    top = std::max(2 * (i - 2), even_top);
  }
  return top + stabilization_window(n, i);
}

LambdaDim lambda_dim_of(const WeightTable& lambda, int i) {
  LambdaDim r;
  r.dimension = lambda.total();
  r.max_degree = lambda.max_degree;
  r.window = stabilization_window(lambda.n, i);
  r.top_degree = lambda.top_degree();
  r.stabilized = lambda.max_degree >= r.window && r.top_degree <= lambda.max_degree - r.window;
  return r;
}

LambdaDim lambda_dim(int n, int i, int max_degree, ScalarMode mode, LcsStore& store) {
  return lambda_dim_of(lambda_weights(n, i, max_degree, mode, store), i);
}

}  // namespace lienil
