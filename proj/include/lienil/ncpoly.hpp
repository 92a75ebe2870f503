#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lienil/scalar.hpp"
#include "lienil/word.hpp"

namespace lienil {

/// Element of the free associative algebra A_n over Q or F_p.
///
/// Terms are kept in a map keyed by Word (deglex order); zero coefficients are
/// never stored, so equality of polynomials is equality of term maps.
class NCPoly {
 public:
  using TermMap = std::map<Word, Scalar>;

  NCPoly() = default;
  NCPoly(int n, ScalarMode mode);

  static NCPoly generator(int n, int index, ScalarMode mode = ScalarMode::exact());
  static NCPoly monomial(int n, const Word& w, const Scalar& c);
  static NCPoly constant(int n, const Scalar& c);

  int n() const { return n_; }
  ScalarMode mode() const { return mode_; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;

  /// Adds c*w; drops the term if the coefficient cancels.
  void add_term(const Word& w, const Scalar& c);

  /// Common multidegree if every term shares one; nullopt otherwise (and for 0).
  std::optional<MultiDegree> homogeneous_degree() const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Scalar& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
  friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

  bool operator==(const NCPoly& o) const;

  /// Same polynomial viewed in a larger ambient algebra A_m, m >= n.
  NCPoly widened(int m) const;

  /// Terms in deglex order joined by " + " / " - ", e.g. "x1*x2 - x2*x1".
  std::string to_string() const;
  /// Inverse of to_string; also accepts "2*x1*x2", "1/2 x1", "(-3/4)*x2".
  static NCPoly parse(std::string_view text, int n, ScalarMode mode = ScalarMode::exact());

 private:
  void check(const NCPoly& o) const;

  int n_ = 0;
  ScalarMode mode_;
  TermMap terms_;
};

NCPoly mul(const NCPoly& p, const NCPoly& q);
/// pq - qp
NCPoly commutator(const NCPoly& p, const NCPoly& q);
/// [...[[a_1,a_2],a_3],...,a_k]; a single entry is returned unchanged.
NCPoly left_normed_bracket(std::span<const NCPoly> entries);
/// Left-normed bracket of generators x_{g_1},...,x_{g_k}.
NCPoly bracket_of_generators(int n, std::span<const int> generators, ScalarMode mode = ScalarMode::exact());

std::map<MultiDegree, NCPoly> homogeneous_components(const NCPoly& p);

/// Signed word expansion of the left-normed bracket of single letters:
/// 2^(k-1) (word, sign) pairs, possibly with repeated words when letters repeat.
std::vector<std::pair<Word, int>> expand_letter_bracket(const Word& letters);

}  // namespace lienil
