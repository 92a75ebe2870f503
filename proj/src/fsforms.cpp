#include "lienil/fsforms.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "lienil/word.hpp"

namespace lienil {

namespace {

/// Sign of dx_S ^ dx_T (sets disjoint): (-1)^#{(s,t): s in S, t in T, s > t}.
int wedge_sign(uint64_t s, uint64_t t) {
  int inversions = 0;
  for (uint64_t rest = t; rest != 0; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    const uint64_t above = bit == 63 ? 0 : (s >> (bit + 1));
    inversions += std::popcount(above);
  }
  return (inversions % 2) ? -1 : 1;
}

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool negative(const Scalar& c) { return c.mode().is_exact() && sgn(c.rational()) < 0; }

int parse_index(std::string_view s, int n) {
  if (s.empty()) throw std::invalid_argument("missing index");
  size_t used = 0;
  const int k = std::stoi(std::string(s), &used);
  if (used != s.size() || k < 1 || k > n) throw std::invalid_argument("bad generator index '" + std::string(s) + "'");
  return k;
}

}  // namespace

int FormKey::form_degree() const { return std::popcount(mask); }

int FormKey::poly_degree() const {
  int d = 0;
  for (int e : exps) d += e;
  return d;
}

Form Form::x(int n, int i, ScalarMode mode) {
  FormKey k{std::vector<int>(static_cast<size_t>(n), 0), 0};
  k.exps.at(static_cast<size_t>(i - 1)) = 1;
  return term(n, k, Scalar(mode, 1));
}

Form Form::dx(int n, int i, ScalarMode mode) {
  if (i < 1 || i > n) throw std::out_of_range("dx index out of range");
  return term(n, FormKey{std::vector<int>(static_cast<size_t>(n), 0), uint64_t{1} << (i - 1)}, Scalar(mode, 1));
}

Form Form::constant(int n, const Scalar& c) {
  return term(n, FormKey{std::vector<int>(static_cast<size_t>(n), 0), 0}, c);
}

Form Form::term(int n, FormKey key, const Scalar& c) {
  if (static_cast<int>(key.exps.size()) != n) throw std::invalid_argument("form key has wrong length");
  Form f(n, c.mode());
  f.add_term(key, c);
  return f;
}

bool Form::is_even() const {
  for (const auto& [k, c] : terms_) {
    if (k.form_degree() % 2) return false;
  }
  return true;
}

void Form::add_term(const FormKey& key, const Scalar& c) {
  if (c.mode() != mode_) throw ModeMismatch("form term mode differs");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Form::check(const Form& o) const {
  if (n_ != o.n_ || mode_ != o.mode_) throw ModeMismatch("forms over different n or modes");
}

Form Form::operator-() const {
  Form r(n_, mode_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Form& Form::operator+=(const Form& o) {
  check(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  check(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Form operator*(const Scalar& c, const Form& a) {
  Form r(a.n(), a.mode());
  for (const auto& [k, x] : a.terms()) r.add_term(k, c * x);
  return r;
}

bool Form::operator==(const Form& o) const { return n_ == o.n_ && mode_ == o.mode_ && terms_ == o.terms_; }

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool neg = negative(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const Scalar mag = neg ? -c : c;
    std::string mono;
    for (size_t v = 0; v < k.exps.size(); ++v) {
      if (k.exps[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v + 1);
      if (k.exps[v] > 1) mono += "^" + std::to_string(k.exps[v]);
    }
    if (k.mask) {
      if (!mono.empty()) mono += "*";
      mono += "dx{";
      bool comma = false;
      for (int v = 0; v < 64; ++v) {
        if (!(k.mask >> v & 1)) continue;
        if (comma) mono += ",";
        mono += std::to_string(v + 1);
        comma = true;
      }
      mono += "}";
    }
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

Form Form::parse(std::string_view text, int n, ScalarMode mode) {
  // Split into signed terms at top-level '+' / '-'.
  std::vector<std::pair<int, std::string>> pieces;
  int sign = 1;
  int depth = 0;
  std::string cur;
  auto flush = [&]() {
    const std::string t = trim(cur);
    if (!t.empty()) pieces.emplace_back(sign, t);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '{' || ch == '(') ++depth;
    if (ch == '}' || ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      const std::string t = trim(cur);
      if (t.empty()) {
        if (ch == '-') sign = -sign;
        continue;
      }
      flush();
      sign = ch == '-' ? -1 : 1;
      continue;
    }
    cur += ch;
  }
  flush();
  if (depth != 0) throw std::invalid_argument("unbalanced braces in form '" + std::string(text) + "'");

  Form result(n, mode);
  if (pieces.size() == 1 && pieces[0].second == "0") return result;
  for (const auto& [s, body] : pieces) {
    Form acc = constant(n, Scalar(mode, s));
    size_t pos = 0;
    while (pos <= body.size()) {
      size_t star_pos = pos;
      int dep = 0;
      while (star_pos < body.size() && !(dep == 0 && body[star_pos] == '*')) {
        if (body[star_pos] == '{' || body[star_pos] == '(') ++dep;
        if (body[star_pos] == '}' || body[star_pos] == ')') --dep;
        ++star_pos;
      }
      std::string factor = trim(std::string_view(body).substr(pos, star_pos - pos));
      pos = star_pos + 1;
      if (factor.empty()) throw std::invalid_argument("empty factor in '" + body + "'");
      Form f(n, mode);
      if (factor.rfind("dx", 0) == 0) {
        std::string inner = factor.substr(2);
        if (!inner.empty() && inner.front() == '{') {
          if (inner.back() != '}') throw std::invalid_argument("bad dx factor '" + factor + "'");
          inner = inner.substr(1, inner.size() - 2);
        }
        f = constant(n, Scalar(mode, 1));
        size_t a = 0;
        while (a <= inner.size()) {
          size_t b = inner.find(',', a);
          if (b == std::string::npos) b = inner.size();
          f = wedge(f, dx(n, parse_index(trim(std::string_view(inner).substr(a, b - a)), n), mode));
          a = b + 1;
        }
      } else if (factor.front() == 'x') {
        const size_t caret = factor.find('^');
        const int idx = parse_index(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), n);
        int e = 1;
        if (caret != std::string::npos) e = std::stoi(factor.substr(caret + 1));
        if (e < 0) throw std::invalid_argument("negative exponent in '" + factor + "'");
        FormKey k{std::vector<int>(static_cast<size_t>(n), 0), 0};
        k.exps[static_cast<size_t>(idx - 1)] = e;
        f = term(n, k, Scalar(mode, 1));
      } else {
        if (factor.front() == '(' && factor.back() == ')') factor = factor.substr(1, factor.size() - 2);
        f = constant(n, Scalar::parse(factor, mode));
      }
      acc = wedge(acc, f);
      if (star_pos >= body.size()) break;
    }
    result += acc;
  }
  return result;
}

Form wedge(const Form& a, const Form& b) {
  if (a.n() != b.n() || a.mode() != b.mode()) throw ModeMismatch("wedge of forms over different n or modes");
  Form r(a.n(), a.mode());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.mask & kb.mask) continue;
      FormKey k{ka.exps, ka.mask | kb.mask};
      for (size_t v = 0; v < k.exps.size(); ++v) k.exps[v] += kb.exps[v];
      const Scalar c = ca * cb;
      r.add_term(k, wedge_sign(ka.mask, kb.mask) < 0 ? -c : c);
    }
  }
  return r;
}

Form d(const Form& a) {
  Form r(a.n(), a.mode());
  for (const auto& [k, c] : a.terms()) {
    for (int v = 0; v < a.n(); ++v) {
      const uint64_t bit = uint64_t{1} << v;
      if (k.exps[static_cast<size_t>(v)] == 0 || (k.mask & bit)) continue;
      FormKey nk{k.exps, k.mask | bit};
      --nk.exps[static_cast<size_t>(v)];
      Scalar coeff = c * Scalar(a.mode(), k.exps[static_cast<size_t>(v)]);
      // dx_v moves to its sorted slot past the lower indices of S.
      if (std::popcount(k.mask & (bit - 1)) % 2) coeff = -coeff;
      r.add_term(nk, coeff);
    }
  }
  return r;
}

Form star(const Form& a, const Form& b) {
  if (!a.is_even() || !b.is_even()) throw std::invalid_argument("star product is defined on even forms only");
  return wedge(a, b) + wedge(d(a), d(b));
}

Form star_commutator(const Form& a, const Form& b) { return star(a, b) - star(b, a); }

std::vector<FormKey> even_basis(int n, int degree) {
  std::vector<FormKey> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    const int k = std::popcount(mask);
    if (k % 2 || k > degree) continue;
    for (const auto& mu : multidegrees_of_total(n, degree - k)) out.push_back({mu.exponents(), mask});
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t even_form_dimension(int n, int degree) {
  uint64_t total = 0;
  for (int k = 0; k <= std::min(n, degree); k += 2) {
    // binom(n, k) * binom(degree - k + n - 1, n - 1)
    uint64_t subsets = 1, monos = 1;
    for (int t = 1; t <= k; ++t) subsets = subsets * static_cast<uint64_t>(n - k + t) / static_cast<uint64_t>(t);
    for (int t = 1; t <= n - 1; ++t) monos = monos * static_cast<uint64_t>(degree - k + t) / static_cast<uint64_t>(t);
    total += subsets * monos;
  }
  return total;
}

FsReport fs_check(int n, int max_degree, ScalarMode mode, LcsStore& store) {
  if (n < 2 || n > 16) throw std::invalid_argument("fs_check needs 2 <= n <= 16");
  if (max_degree < 2) throw std::invalid_argument("fs_check needs max_degree >= 2");
  FsReport rep;
  rep.n = n;
  rep.max_degree = max_degree;
  rep.mode = mode;

  std::vector<Form> basis;
  for (int deg = 0; deg <= max_degree; ++deg) {
    for (const auto& k : even_basis(n, deg)) basis.push_back(Form::term(n, k, Scalar(mode, 1)));
  }
  std::vector<std::vector<Form>> pair(basis.size());
  for (size_t a = 0; a < basis.size(); ++a) {
    pair[a].reserve(basis.size());
    for (size_t b = 0; b < basis.size(); ++b) pair[a].push_back(star(basis[a], basis[b]));
  }
  for (size_t a = 0; a < basis.size() && rep.associative; ++a) {
    for (size_t b = 0; b < basis.size() && rep.associative; ++b) {
      for (size_t c = 0; c < basis.size(); ++c) {
        ++rep.triples;
        const Form left = star(pair[a][b], basis[c]);
        const Form right = star(basis[a], pair[b][c]);
        if (!(left == right)) {
          rep.associative = false;
          rep.associativity_witness =
              "(" + basis[a].to_string() + ", " + basis[b].to_string() + ", " + basis[c].to_string() + ")";
          break;
        }
      }
    }
  }

  auto y = [&](int i, int j) { return star_commutator(Form::x(n, i, mode), Form::x(n, j, mode)); };
  for (int i = 1; i <= n && rep.commutator_ok; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Form expected = Scalar(mode, 2) * wedge(Form::dx(n, i, mode), Form::dx(n, j, mode));
      if (!(y(i, j) == expected)) {
        rep.commutator_ok = false;
        break;
      }
    }
  }
  auto fail_relation = [&](const std::string& what) {
    if (rep.relations_hold) rep.relation_witness = what;
    rep.relations_hold = false;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int l = 1; l <= n; ++l) {
        ++rep.relations;
        if (!star_commutator(Form::x(n, i, mode), y(j, l)).is_zero()) {
          fail_relation("[x" + std::to_string(i) + ", y" + std::to_string(j) + std::to_string(l) + "]");
        }
        for (int k = 1; k <= n; ++k) {
          ++rep.relations;
          if (!(star(y(i, j), y(k, l)) + star(y(i, k), y(j, l))).is_zero()) {
            fail_relation("y" + std::to_string(i) + std::to_string(j) + "*y" + std::to_string(k) + std::to_string(l) +
                          " + y" + std::to_string(i) + std::to_string(k) + "*y" + std::to_string(j) +
                          std::to_string(l));
          }
        }
      }
    }
  }

  const auto h = hilbert_q(n, 3, max_degree, mode, store);
  rep.q_dimensions = h.coefficients;
  for (int deg = 0; deg <= max_degree; ++deg) rep.form_dimensions.push_back(even_form_dimension(n, deg));
  rep.dimensions_match = rep.form_dimensions == rep.q_dimensions;
  rep.passed = rep.associative && rep.relations_hold && rep.commutator_ok && rep.dimensions_match;
  return rep;
}

}  // namespace lienil
