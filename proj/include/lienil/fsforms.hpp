#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lienil/lcs.hpp"

namespace lienil {

/// x^e dx_S: exponent vector e and the index set S as a bitmask (bit k-1 = dx_k).
struct FormKey {
  std::vector<int> exps;
  uint64_t mask = 0;

  int form_degree() const;
  int poly_degree() const;
  auto operator<=>(const FormKey&) const = default;
};

/// Polynomial differential form in x_1..x_n.
class Form {
 public:
  Form() = default;
  Form(int n, ScalarMode mode) : n_(n), mode_(mode) {}

  static Form x(int n, int i, ScalarMode mode = ScalarMode::exact());
  static Form dx(int n, int i, ScalarMode mode = ScalarMode::exact());
  static Form constant(int n, const Scalar& c);
  static Form term(int n, FormKey key, const Scalar& c);

  int n() const { return n_; }
  ScalarMode mode() const { return mode_; }
  const std::map<FormKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_even() const;

  void add_term(const FormKey& key, const Scalar& c);

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Scalar& c, const Form& a);
  bool operator==(const Form& o) const;

  /// "x1^2*dx{1,2} - 1/2*x2", "0" for the zero form.
  std::string to_string() const;
  static Form parse(std::string_view text, int n, ScalarMode mode = ScalarMode::exact());

 private:
  void check(const Form& o) const;

  int n_ = 0;
  ScalarMode mode_;
  std::map<FormKey, Scalar> terms_;
};

Form wedge(const Form& a, const Form& b);
/// de Rham differential.
Form d(const Form& a);
/// a*b = ab + da^db on even forms; throws std::invalid_argument on odd input.
Form star(const Form& a, const Form& b);
/// a*b - b*a
Form star_commutator(const Form& a, const Form& b);

/// Even basis forms x^e dx_S of degree |e| + |S| = degree.
std::vector<FormKey> even_basis(int n, int degree);
/// Number of even basis forms of the given degree.
uint64_t even_form_dimension(int n, int degree);

struct FsReport {
  int n = 0;
  int max_degree = 0;
  ScalarMode mode;
  uint64_t triples = 0;  // basis triples (each of degree <= max_degree) checked
  bool associative = true;
  std::optional<std::string> associativity_witness;
  uint64_t relations = 0;
  bool relations_hold = true;
  std::optional<std::string> relation_witness;
  bool commutator_ok = true;  // [x_i, x_j]_* = 2 dx_i^dx_j
  std::vector<uint64_t> form_dimensions;
  std::vector<uint64_t> q_dimensions;
  bool dimensions_match = true;
  bool passed = false;
};

/// Associativity of star on all triples of even basis forms of degree <= D,
/// the relations of the Q_{n,3} presentation for y_{ij} = [x_i,x_j]_*, and
/// per-degree dimensions against hilbert_q(n, 3, D).
FsReport fs_check(int n, int max_degree, ScalarMode mode, LcsStore& store = default_store());

}  // namespace lienil
