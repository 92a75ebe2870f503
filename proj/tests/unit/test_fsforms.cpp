#include <doctest.h>

#include <random>

#include "lienil/fsforms.hpp"

using namespace lienil;

namespace {
const ScalarMode kQ = ScalarMode::exact();

Form F(const char* text, int n = 3) { return Form::parse(text, n); }

Form random_form(std::mt19937_64& rng, int n, bool even_only) {
  std::uniform_int_distribution<int> e(0, 2), coef(-3, 3);
  std::uniform_int_distribution<uint64_t> mask(0, (uint64_t{1} << n) - 1);
  Form f(n, kQ);
  for (int t = 0; t < 3; ++t) {
    FormKey key;
    for (int k = 0; k < n; ++k) key.exps.push_back(e(rng));
    key.mask = mask(rng);
    if (even_only && key.form_degree() % 2) continue;
    f.add_term(key, Scalar(kQ, coef(rng)));
  }
  return f;
}

Form homogeneous_part(const Form& f, int p) {
  Form out(f.n(), f.mode());
  for (const auto& [key, c] : f.terms()) {
    if (key.form_degree() % 2 == p) out.add_term(key, c);
  }
  return out;
}
}  // namespace

TEST_CASE("wedge and d") {
  CHECK(wedge(Form::dx(3, 1), Form::dx(3, 2)) == -wedge(Form::dx(3, 2), Form::dx(3, 1)));
  CHECK(wedge(Form::dx(3, 1), Form::dx(3, 1)).is_zero());
  CHECK(wedge(Form::x(3, 1), Form::x(3, 2)) == F("x1*x2"));
  CHECK(d(F("x1^2")) == F("2*x1*dx{1}"));
  CHECK(d(F("x1*x2")) == F("x2*dx{1} + x1*dx{2}"));
  CHECK(d(F("x3*dx{1,2}")) == F("dx{1,2,3}"));
  CHECK(d(Form::constant(3, Scalar(kQ, 5))).is_zero());
}

TEST_CASE("d squares to zero and is a graded derivation") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Form a = random_form(rng, 3, false), b = random_form(rng, 3, false);
    CHECK(d(d(a)).is_zero());
    for (int p = 0; p < 2; ++p) {
      const Form ap = homogeneous_part(a, p);
      const Form sign_ap = p ? -ap : ap;
      CHECK(d(wedge(ap, b)) == wedge(d(ap), b) + wedge(sign_ap, d(b)));
    }
    CHECK(homogeneous_part(d(homogeneous_part(a, 0)), 0).is_zero());
  }
}

TEST_CASE("star product") {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      CHECK(star_commutator(Form::x(3, i), Form::x(3, j)) ==
            Scalar(kQ, 2) * wedge(Form::dx(3, i), Form::dx(3, j)));
    }
  }
  CHECK_THROWS_AS(star(Form::dx(3, 1), Form::x(3, 1)), std::invalid_argument);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const Form a = random_form(rng, 3, true), b = random_form(rng, 3, true), c = random_form(rng, 3, true);
    CHECK(star(star(a, b), c) == star(a, star(b, c)));
    CHECK(star(a, Form::constant(3, Scalar(kQ, 1))) == a);
  }
}

TEST_CASE("parse round trip") {
  for (const char* text : {"x1^2*dx{1,2} - 1/2*x2", "0", "3", "-dx{1,3}", "x1*x2^3*x3*dx{2}"}) {
    const Form f = F(text);
    CHECK(Form::parse(f.to_string(), 3) == f);
  }
  CHECK(F("x1^2*dx{1,2} - 1/2*x2").to_string() == "-1/2*x2 + x1^2*dx{1,2}");
  CHECK_THROWS(F("x4"));
  CHECK_THROWS(F("dx{1,2"));
}

TEST_CASE("even form dimensions") {
  CHECK(even_form_dimension(2, 0) == 1);
  CHECK(even_form_dimension(2, 2) == 4);
  CHECK(even_form_dimension(2, 3) == 6);
  for (int n = 2; n <= 4; ++n) {
    for (int deg = 0; deg <= 5; ++deg) {
      const auto basis = even_basis(n, deg);
      CHECK(basis.size() == even_form_dimension(n, deg));
      for (const auto& key : basis) {
        CHECK(key.form_degree() % 2 == 0);
        CHECK(key.poly_degree() + key.form_degree() == deg);
      }
    }
  }
}

TEST_CASE("fs check") {
  const auto r = fs_check(2, 4, kQ);
  CHECK(r.passed);
  CHECK(r.form_dimensions == r.q_dimensions);
  CHECK(r.relations > 0);
  CHECK(fs_check(3, 3, ScalarMode::mod(kDefaultPrime)).passed);
  CHECK_THROWS(fs_check(1, 3, kQ));
}
