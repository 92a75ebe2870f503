#include "lienil/ncpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace lienil {

NCPoly::NCPoly(int n, ScalarMode mode) : n_(n), mode_(mode) {
  if (n < 1 || n > kMaxGenerators) throw std::invalid_argument("generator count out of range");
}

NCPoly NCPoly::generator(int n, int index, ScalarMode mode) {
  if (index < 1 || index > n) throw std::out_of_range("generator index out of range");
  return monomial(n, Word::letter(index), Scalar(mode, 1));
}

NCPoly NCPoly::monomial(int n, const Word& w, const Scalar& c) {
  NCPoly p(n, c.mode());
  p.add_term(w, c);
  return p;
}

NCPoly NCPoly::constant(int n, const Scalar& c) { return monomial(n, Word(), c); }

Scalar NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(mode_, 0) : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.mode() != mode_) throw ModeMismatch("coefficient mode does not match polynomial mode");
  if (w.max_letter() > n_) throw std::out_of_range("word " + w.to_string() + " exceeds n=" + std::to_string(n_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<MultiDegree> NCPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  MultiDegree d = multidegree_of(terms_.begin()->first, n_);
  for (const auto& [w, c] : terms_) {
    if (multidegree_of(w, n_) != d) return std::nullopt;
  }
  return d;
}

void NCPoly::check(const NCPoly& o) const {
  if (n_ != o.n_) {
    throw ModeMismatch("ambient generator count mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  }
  if (mode_ != o.mode_) throw ModeMismatch("scalar mode mismatch: " + mode_.tag() + " vs " + o.mode_.tag());
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  check(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  check(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (c.mode() != mode_) throw ModeMismatch("scalar mode mismatch");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  a.check(b);
  NCPoly r(a.n_, a.mode_);
  for (const auto& [u, c] : a.terms_) {
    for (const auto& [v, d] : b.terms_) r.add_term(u * v, c * d);
  }
  return r;
}

bool NCPoly::operator==(const NCPoly& o) const { return n_ == o.n_ && mode_ == o.mode_ && terms_ == o.terms_; }

NCPoly NCPoly::widened(int m) const {
  if (m < n_) throw std::invalid_argument("cannot narrow ambient algebra");
  NCPoly r = *this;
  r.n_ = m;
  return r;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    bool negative = mode_.is_exact() && c.rational() < 0;
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += w.to_string();
    } else {
      out += mag.to_string() + "*" + w.to_string();
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int n, ScalarMode mode) : s_(text), n_(n), mode_(mode) {}

  NCPoly parse() {
    NCPoly out(n_, mode_);
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip();
      auto [coef, word] = term();
      if (sign < 0) coef = -coef;
      out.add_term(word, coef);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  std::string digits() {
    size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Scalar rational() {
    bool paren = false;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      paren = true;
      ++pos_;
      skip();
    }
    std::string lit;
    if (paren && pos_ < s_.size() && s_[pos_] == '-') {
      lit += '-';
      ++pos_;
    }
    lit += digits();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip();
      lit += "/" + digits();
    }
    if (paren) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
    }
    return Scalar::parse(lit, mode_);
  }

  std::pair<Scalar, Word> term() {
    Scalar coef(mode_, 1);
    bool have_coef = false;
    if (at_digit() || (pos_ < s_.size() && s_[pos_] == '(')) {
      coef = rational();
      have_coef = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip();
      }
    }
    std::vector<int> letters;
    while (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      int g = std::stoi(digits());
      if (g < 1 || g > n_) fail("generator x" + std::to_string(g) + " out of range for n=" + std::to_string(n_));
      letters.push_back(g);
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip();
        if (pos_ >= s_.size() || s_[pos_] != 'x') fail("expected generator after '*'");
      }
    }
    if (!have_coef && letters.empty()) fail("expected a term");
    return {coef, Word(letters)};
  }

  std::string_view s_;
  size_t pos_ = 0;
  int n_;
  ScalarMode mode_;
};

}  // namespace

NCPoly NCPoly::parse(std::string_view text, int n, ScalarMode mode) { return PolyParser(text, n, mode).parse(); }

NCPoly mul(const NCPoly& p, const NCPoly& q) { return p * q; }

NCPoly commutator(const NCPoly& p, const NCPoly& q) { return p * q - q * p; }

NCPoly left_normed_bracket(std::span<const NCPoly> entries) {
  if (entries.empty()) throw std::invalid_argument("left_normed_bracket of an empty list");
  NCPoly acc = entries.front();
  for (size_t k = 1; k < entries.size(); ++k) acc = commutator(acc, entries[k]);
  return acc;
}

std::vector<std::pair<Word, int>> expand_letter_bracket(const Word& letters) {
  std::vector<std::pair<Word, int>> cur;
  if (letters.empty()) return cur;
  cur.emplace_back(Word::from_bytes(letters.bytes().substr(0, 1)), 1);
  for (size_t k = 1; k < letters.length(); ++k) {
    std::string a(1, letters.bytes()[k]);
    std::vector<std::pair<Word, int>> next;
    next.reserve(cur.size() * 2);
    for (const auto& [w, s] : cur) {
      next.emplace_back(Word::from_bytes(w.bytes() + a), s);
      next.emplace_back(Word::from_bytes(a + w.bytes()), -s);
    }
    cur = std::move(next);
  }
  return cur;
}

NCPoly bracket_of_generators(int n, std::span<const int> generators, ScalarMode mode) {
  if (generators.empty()) throw std::invalid_argument("bracket of no generators");
  NCPoly out(n, mode);
  for (const auto& [w, s] : expand_letter_bracket(Word(std::vector<int>(generators.begin(), generators.end())))) {
    out.add_term(w, Scalar(mode, s));
  }
  return out;
}

std::map<MultiDegree, NCPoly> homogeneous_components(const NCPoly& p) {
  std::map<MultiDegree, NCPoly> out;
  for (const auto& [w, c] : p.terms()) {
    auto it = out.try_emplace(multidegree_of(w, p.n()), p.n(), p.mode()).first;
    it->second.add_term(w, c);
  }
  return out;
}

}  // namespace lienil
