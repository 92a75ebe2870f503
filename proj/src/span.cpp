#include "lienil/span.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "echelon.hpp"

namespace lienil {

// ---------------------------------------------------------------------------
// ComponentIndex

ComponentIndex::ComponentIndex(MultiDegree delta) : delta_(std::move(delta)), dim_(multinomial(delta_)) {
  if (delta_.has_negative()) throw std::invalid_argument("negative multidegree");
  if (dim_ > UINT32_MAX) throw ResourceLimitError("component dimension exceeds 32-bit column indexing");
}

uint32_t ComponentIndex::index_of(const Word& w) const {
  const int len = delta_.total();
  if (static_cast<int>(w.length()) != len) throw std::invalid_argument("word degree does not match component");
  std::vector<int> rem = delta_.exponents();
  uint64_t count = dim_;  // words of multidegree rem
  uint64_t index = 0;
  int remaining = len;
  for (size_t k = 0; k < w.length(); ++k) {
    const int g = w[k] - 1;
    if (g >= n() || rem[static_cast<size_t>(g)] == 0) {
      throw std::invalid_argument("word " + w.to_string() + " not of multidegree " + delta_.to_string());
    }
    for (int a = 0; a < g; ++a) index += count * static_cast<uint64_t>(rem[static_cast<size_t>(a)]) / static_cast<uint64_t>(remaining);
    count = count * static_cast<uint64_t>(rem[static_cast<size_t>(g)]) / static_cast<uint64_t>(remaining);
    --rem[static_cast<size_t>(g)];
    --remaining;
  }
  return static_cast<uint32_t>(index);
}

Word ComponentIndex::word_at(uint64_t index) const {
  if (index >= dim_) throw std::out_of_range("column index out of range");
  std::vector<int> rem = delta_.exponents();
  uint64_t count = dim_;
  int remaining = delta_.total();
  std::string bytes;
  while (remaining > 0) {
    for (int a = 0; a < n(); ++a) {
      if (rem[static_cast<size_t>(a)] == 0) continue;
      uint64_t block = count * static_cast<uint64_t>(rem[static_cast<size_t>(a)]) / static_cast<uint64_t>(remaining);
      if (index < block) {
        bytes.push_back(static_cast<char>(a + 1));
        count = block;
        --rem[static_cast<size_t>(a)];
        break;
      }
      index -= block;
    }
    --remaining;
  }
  return Word::from_bytes(std::move(bytes));
}

// ---------------------------------------------------------------------------
// RowSpace

struct RowSpace::Impl {
  virtual ~Impl() = default;
  virtual size_t rank() const = 0;
  virtual bool dense() const = 0;
  virtual bool insert_int(const IntRow& row) = 0;
  virtual bool insert_scalar(const ScalarRow& row) = 0;
  virtual bool contains_int(const IntRow& row) const = 0;
  virtual ScalarRow residual(const ScalarRow& row) const = 0;
  virtual std::vector<ScalarRow> rows() const = 0;
};

namespace {

template <class F, class Engine>
class EchelonImpl final : public RowSpace::Impl {
 public:
  using Vec = detail::SparseVec<F>;

  EchelonImpl(F f, uint64_t ncols, ScalarMode mode, bool is_dense)
      : engine_(std::move(f), ncols), ncols_(ncols), mode_(mode), dense_(is_dense) {}

  size_t rank() const override { return engine_.rank(); }
  bool dense() const override { return dense_; }

  bool insert_int(const IntRow& row) override { return engine_.insert(convert(row)); }
  bool insert_scalar(const ScalarRow& row) override { return engine_.insert(convert(row)); }
  bool contains_int(const IntRow& row) const override { return engine_.reduce(convert(row)).empty(); }

  ScalarRow residual(const ScalarRow& row) const override { return to_scalar(engine_.reduce(convert(row))); }

  std::vector<ScalarRow> rows() const override {
    std::vector<ScalarRow> out;
    if constexpr (std::is_same_v<Engine, detail::DenseEchelon<F>>) {
      for (const auto& v : engine_.sorted_rows()) out.push_back(to_scalar(v));
    } else {
      for (const Vec* v : engine_.sorted_rows()) out.push_back(to_scalar(*v));
    }
    return out;
  }

 private:
  template <class Row, class Conv>
  Vec convert_impl(const Row& row, Conv conv) const {
    std::vector<std::pair<uint32_t, typename F::Elem>> tmp;
    tmp.reserve(row.size());
    for (const auto& [c, x] : row) {
      if (c >= ncols_) throw std::out_of_range("row column out of range");
      tmp.emplace_back(c, conv(x));
    }
    std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Vec v;
    const F& f = engine_.field();
    for (size_t k = 0; k < tmp.size();) {
      uint32_t c = tmp[k].first;
      typename F::Elem acc = tmp[k].second;
      for (++k; k < tmp.size() && tmp[k].first == c; ++k) acc = sum(f, acc, tmp[k].second);
      if (!F::is_zero(acc)) {
        v.cols.push_back(c);
        v.vals.push_back(std::move(acc));
      }
    }
    return v;
  }

  static typename F::Elem sum(const F& f, const typename F::Elem& a, const typename F::Elem& b) {
    if constexpr (std::is_same_v<F, detail::ModField>) {
      return (a + b) % f.p;
    } else {
      return a + b;
    }
  }

  Vec convert(const IntRow& row) const {
    const F& f = engine_.field();
    return convert_impl(row, [&](int64_t x) { return f.from_int(x); });
  }

  Vec convert(const ScalarRow& row) const {
    const F& f = engine_.field();
    return convert_impl(row, [&](const Scalar& x) {
      if (x.mode() != mode_) throw ModeMismatch("row coefficient mode does not match span mode");
      return f.from_scalar(x);
    });
  }

  ScalarRow to_scalar(const Vec& v) const {
    ScalarRow out;
    out.reserve(v.size());
    const F& f = engine_.field();
    for (size_t k = 0; k < v.size(); ++k) out.emplace_back(v.cols[k], f.to_scalar(v.vals[k]));
    return out;
  }

  Engine engine_;
  uint64_t ncols_;
  ScalarMode mode_;
  bool dense_;
};

}  // namespace

RowSpace::RowSpace(ScalarMode mode, uint64_t ncols, Storage storage) : mode_(mode), ncols_(ncols) {
  if (ncols > UINT32_MAX) throw ResourceLimitError("too many columns");
  bool use_dense = storage == Storage::kDense || (storage == Storage::kAuto && ncols <= kDenseColumnLimit);
  if (mode.is_exact()) {
    if (use_dense) {
      impl_ = std::make_unique<EchelonImpl<detail::RationalField, detail::DenseEchelon<detail::RationalField>>>(
          detail::RationalField{}, ncols, mode, true);
    } else {
      impl_ = std::make_unique<EchelonImpl<detail::RationalField, detail::SparseEchelon<detail::RationalField>>>(
          detail::RationalField{}, ncols, mode, false);
    }
  } else {
    detail::ModField f(mode.prime());
    if (use_dense) {
      impl_ = std::make_unique<EchelonImpl<detail::ModField, detail::DenseEchelon<detail::ModField>>>(f, ncols, mode,
                                                                                                         true);
    } else {
      impl_ = std::make_unique<EchelonImpl<detail::ModField, detail::SparseEchelon<detail::ModField>>>(f, ncols, mode,
                                                                                                          false);
    }
  }
}

RowSpace::~RowSpace() = default;
RowSpace::RowSpace(RowSpace&&) noexcept = default;
RowSpace& RowSpace::operator=(RowSpace&&) noexcept = default;

size_t RowSpace::rank() const { return impl_->rank(); }
bool RowSpace::dense() const { return impl_->dense(); }
bool RowSpace::insert(const IntRow& row) { return impl_->insert_int(row); }
bool RowSpace::insert(const ScalarRow& row) { return impl_->insert_scalar(row); }

void RowSpace::insert_all(std::vector<IntRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });
  for (const auto& r : rows) {
    if (full()) break;
    impl_->insert_int(r);
  }
}

bool RowSpace::contains(const IntRow& row) const { return impl_->contains_int(row); }
bool RowSpace::contains(const ScalarRow& row) const { return impl_->residual(row).empty(); }
ScalarRow RowSpace::residual(const ScalarRow& row) const { return impl_->residual(row); }
std::vector<ScalarRow> RowSpace::rows() const { return impl_->rows(); }

std::vector<uint32_t> RowSpace::pivots() const {
  std::vector<uint32_t> out;
  for (const auto& r : rows()) out.push_back(r.front().first);
  return out;
}

// ---------------------------------------------------------------------------
// SpanBasis

SpanBasis::SpanBasis(ComponentIndex component, ScalarMode mode, Storage storage)
    : component_(std::make_shared<const ComponentIndex>(std::move(component))),
      mode_(mode),
      space_(std::make_shared<RowSpace>(mode, component_->dimension(), storage)) {}

ScalarRow SpanBasis::to_row(const NCPoly& v) const {
  if (v.mode() != mode_) throw ModeMismatch("vector mode " + v.mode().tag() + " vs span mode " + mode_.tag());
  if (v.n() != component_->n()) throw ModeMismatch("vector ambient n does not match component");
  ScalarRow row;
  row.reserve(v.size());
  for (const auto& [w, c] : v.terms()) row.emplace_back(component_->index_of(w), c);
  return row;
}

NCPoly SpanBasis::from_row(const ScalarRow& row) const {
  NCPoly p(component_->n(), mode_);
  for (const auto& [c, x] : row) p.add_term(component_->word_at(c), x);
  return p;
}

std::vector<NCPoly> SpanBasis::rows() const {
  std::vector<NCPoly> out;
  for (const auto& r : space_->rows()) out.push_back(from_row(r));
  return out;
}

bool SpanBasis::contains(const NCPoly& v) const { return space_->contains(to_row(v)); }

NCPoly SpanBasis::reduce(const NCPoly& v) const { return from_row(space_->residual(to_row(v))); }

void SpanBasis::insert_rows(std::vector<IntRow> rows) { space_->insert_all(std::move(rows)); }

void SpanBasis::insert_polys(std::span<const NCPoly> vectors) {
  std::vector<ScalarRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.push_back(to_row(v));
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& r : rows) {
    if (space_->full()) break;
    space_->insert(r);
  }
}

void SpanBasis::write(std::ostream& out) const {
  out << "lienil-span " << kFormatVersion << "\n";
  out << "mode " << mode_.tag() << "\n";
  out << "delta";
  for (int e : component_->delta().exponents()) out << ' ' << e;
  out << "\n";
  out << "ncols " << component_->dimension() << "\n";
  out << "rank " << rank() << "\n";
  for (const auto& r : space_->rows()) {
    out << r.front().first;
    for (size_t k = 1; k < r.size(); ++k) out << ' ' << r[k].first << ':' << r[k].second.to_string();
    out << "\n";
  }
}

SpanBasis SpanBasis::read(std::istream& in, const ComponentIndex& component, ScalarMode mode) {
  auto fail = [](const std::string& what) -> SpanBasis { throw std::runtime_error("span cache: " + what); };
  std::string line, key;
  int version = 0;
  if (!std::getline(in, line) || (std::istringstream(line) >> key >> version, key != "lienil-span")) {
    return fail("bad header");
  }
  if (version != kFormatVersion) return fail("format version " + std::to_string(version));
  std::string tag;
  if (!std::getline(in, line) || (std::istringstream(line) >> key >> tag, key != "mode") ||
      ScalarMode::from_tag(tag) != mode) {
    return fail("mode mismatch");
  }
  std::vector<int> exps;
  if (!std::getline(in, line)) return fail("missing delta");
  {
    std::istringstream ls(line);
    ls >> key;
    for (int e; ls >> e;) exps.push_back(e);
    if (key != "delta" || MultiDegree(exps) != component.delta()) return fail("delta mismatch");
  }
  uint64_t ncols = 0;
  size_t rank = 0;
  if (!std::getline(in, line) || (std::istringstream(line) >> key >> ncols, key != "ncols") ||
      ncols != component.dimension()) {
    return fail("ncols mismatch");
  }
  if (!std::getline(in, line) || (std::istringstream(line) >> key >> rank, key != "rank")) return fail("missing rank");
  SpanBasis basis(component, mode);
  for (size_t k = 0; k < rank; ++k) {
    if (!std::getline(in, line)) return fail("truncated rows");
    std::istringstream ls(line);
    ScalarRow row;
    uint32_t pivot = 0;
    ls >> pivot;
    row.emplace_back(pivot, Scalar(mode, 1));
    for (std::string tok; ls >> tok;) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) return fail("bad entry '" + tok + "'");
      row.emplace_back(static_cast<uint32_t>(std::stoul(tok.substr(0, colon))),
                       Scalar::parse(tok.substr(colon + 1), mode));
    }
    basis.space_->insert(row);
  }
  if (basis.rank() != rank) return fail("rows are dependent");
  return basis;
}

// ---------------------------------------------------------------------------

SpanBasis echelonize(std::span<const NCPoly> vectors, const MultiDegree& delta, ScalarMode mode, Storage storage) {
  SpanBasis basis(ComponentIndex(delta), mode, storage);
  for (const auto& v : vectors) {
    if (v.is_zero()) continue;
    auto d = v.homogeneous_degree();
    if (!d) throw std::invalid_argument("echelonize: inhomogeneous vector " + v.to_string());
    if (*d != delta) throw std::invalid_argument("echelonize: vector of degree " + d->to_string() + ", expected " + delta.to_string());
  }
  basis.insert_polys(vectors);
  return basis;
}

bool contains(const SpanBasis& basis, const NCPoly& v) {
  if (v.is_zero()) return true;
  if (v.mode() != basis.mode()) throw ModeMismatch("contains: mode mismatch");
  auto d = v.homogeneous_degree();
  if (!d || *d != basis.component().delta()) {
    throw std::invalid_argument("contains: vector is not of multidegree " + basis.component().delta().to_string());
  }
  return basis.contains(v);
}

bool spans_equal(const SpanBasis& a, const SpanBasis& b) {
  if (!(a.component() == b.component())) throw std::invalid_argument("spans_equal: component mismatch");
  if (a.mode() != b.mode()) throw ModeMismatch("spans_equal: mode mismatch");
  if (a.rank() != b.rank()) return false;
  for (const auto& r : a.space().rows()) {
    if (!b.space().contains(r)) return false;
  }
  return true;
}

}  // namespace lienil
