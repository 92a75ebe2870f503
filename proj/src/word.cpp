#include "lienil/word.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lienil {

MultiDegree::MultiDegree(std::vector<int> exps) : exps_(std::move(exps)) {}

MultiDegree MultiDegree::unit_vector(int n, int generator) {
  if (generator < 1 || generator > n) throw std::out_of_range("generator index out of range");
  MultiDegree d(n);
  d.exps_[static_cast<size_t>(generator - 1)] = 1;
  return d;
}

int MultiDegree::total() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool MultiDegree::leq(const MultiDegree& o) const {
  if (o.n() != n()) return false;
  for (size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] > o.exps_[j]) return false;
  }
  return true;
}

bool MultiDegree::is_dominant() const { return std::is_sorted(exps_.rbegin(), exps_.rend()); }

MultiDegree MultiDegree::sorted_descending() const {
  MultiDegree r = *this;
  std::sort(r.exps_.begin(), r.exps_.end(), std::greater<>());
  return r;
}

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
  if (o.n() != n()) throw std::invalid_argument("multidegree length mismatch");
  MultiDegree r = *this;
  for (size_t j = 0; j < exps_.size(); ++j) r.exps_[j] += o.exps_[j];
  return r;
}

MultiDegree MultiDegree::operator-(const MultiDegree& o) const {
  if (o.n() != n()) throw std::invalid_argument("multidegree length mismatch");
  MultiDegree r = *this;
  for (size_t j = 0; j < exps_.size(); ++j) r.exps_[j] -= o.exps_[j];
  return r;
}

bool MultiDegree::has_negative() const {
  return std::any_of(exps_.begin(), exps_.end(), [](int e) { return e < 0; });
}

std::strong_ordering MultiDegree::operator<=>(const MultiDegree& o) const {
  if (auto c = total() <=> o.total(); c != 0) return c;
  return exps_ <=> o.exps_;
}

std::string MultiDegree::to_string() const {
  std::string s = "(";
  for (size_t j = 0; j < exps_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(exps_[j]);
  }
  return s + ")";
}

Word::Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

Word::Word(const std::vector<int>& letters) {
  letters_.reserve(letters.size());
  for (int g : letters) {
    if (g < 1 || g > kMaxGenerators) throw std::out_of_range("generator index out of range");
    letters_.push_back(static_cast<char>(g));
  }
}

Word Word::letter(int generator) { return Word({generator}); }

int Word::max_letter() const {
  int m = 0;
  for (size_t k = 0; k < letters_.size(); ++k) m = std::max(m, (*this)[k]);
  return m;
}

std::vector<int> Word::letters() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (size_t k = 0; k < letters_.size(); ++k) out.push_back((*this)[k]);
  return out;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
  int c = letters_.compare(o.letters_);  // char_traits<char>::compare is unsigned
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < letters_.size(); ++k) {
    if (k) s += '*';
    s += 'x';
    s += std::to_string((*this)[k]);
  }
  return s;
}

MultiDegree multidegree_of(const Word& w, int n) {
  std::vector<int> e(static_cast<size_t>(n), 0);
  for (size_t k = 0; k < w.length(); ++k) {
    int g = w[k];
    if (g > n) throw std::out_of_range("letter x" + std::to_string(g) + " exceeds n=" + std::to_string(n));
    ++e[static_cast<size_t>(g - 1)];
  }
  return MultiDegree(std::move(e));
}

std::vector<Word> words_of_degree(const MultiDegree& delta) {
  std::vector<Word> out;
  out.reserve(static_cast<size_t>(multinomial(delta)));
  std::vector<int> rem = delta.exponents();
  std::string buf;
  int len = delta.total();
  std::function<void()> rec = [&]() {
    if (static_cast<int>(buf.size()) == len) {
      out.push_back(Word::from_bytes(buf));
      return;
    }
    for (size_t g = 0; g < rem.size(); ++g) {
      if (rem[g] == 0) continue;
      --rem[g];
      buf.push_back(static_cast<char>(g + 1));
      rec();
      buf.pop_back();
      ++rem[g];
    }
  };
  rec();
  return out;
}

std::vector<MultiDegree> multidegrees_of_total(int n, int d) {
  std::vector<MultiDegree> out;
  std::vector<int> e(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      e[static_cast<size_t>(pos)] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<size_t>(pos)] = k;
      rec(pos + 1, left - k);
    }
  };
  if (n > 0) rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiDegree> multidegrees_below(const MultiDegree& bound) {
  std::vector<MultiDegree> out;
  std::vector<int> e(static_cast<size_t>(bound.n()), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == bound.n()) {
      out.emplace_back(e);
      return;
    }
    for (int k = 0; k <= bound[pos]; ++k) {
      e[static_cast<size_t>(pos)] = k;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t multinomial(const MultiDegree& delta) {
  // Product of binomials C(e_1+..+e_k, e_k).
  unsigned __int128 result = 1;
  int running = 0;
  for (int e : delta.exponents()) {
    if (e < 0) return 0;
    for (int k = 1; k <= e; ++k) {
      ++running;
      result = result * static_cast<unsigned>(running) / static_cast<unsigned>(k);
      if (result > UINT64_MAX) throw std::overflow_error("multinomial overflow");
    }
  }
  return static_cast<uint64_t>(result);
}

}  // namespace lienil
