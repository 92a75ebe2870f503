#include <doctest.h>

#include <random>

#include "lienil/identities.hpp"

using namespace lienil;

namespace {
const ScalarMode kQ = ScalarMode::exact();
const std::vector<ScalarMode> kBoth = {ScalarMode::exact(), ScalarMode::mod(kDefaultPrime)};

NCPoly random_poly(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(1, n), coef(-3, 3);
  NCPoly p(n, kQ);
  for (int t = 0; t < 3; ++t) {
    std::vector<int> w(static_cast<size_t>(len(rng)));
    for (auto& c : w) c = letter(rng);
    p.add_term(Word(w), Scalar(kQ, coef(rng)));
  }
  return p;
}
}  // namespace

TEST_CASE("null pair element") {
  const auto x = [](int k) { return NCPoly::generator(4, k); };
  CHECK(null_pair_element(2, 2) == commutator(x(1), x(2)) * commutator(x(3), x(4)));
  CHECK(null_pair_element(1, 1) == NCPoly::generator(2, 1) * NCPoly::generator(2, 2));
}

TEST_CASE("small null pairs") {
  CHECK_FALSE(check_null_pair(2, 2, kQ).is_null);
  CHECK(check_null_pair(2, 3, kQ).is_null);
  CHECK(check_null_pair(3, 2, kQ).is_null);
  CHECK_FALSE(check_null_pair(2, 4, kQ).is_null);
  CHECK(check_null_pair(3, 3, kQ).is_null);
  const auto one = check_null_pair(1, 9, kBoth);
  CHECK(one.is_null);
  CHECK(one.shortcut == "m=1");
}

TEST_CASE("both orders and both methods agree") {
  NullPairOptions given;
  given.canonical_order = false;
  NullPairOptions generic;
  generic.method = NullPairMethod::kGeneric;
  for (int m = 2; m <= 4; ++m) {
    for (int l = 2; m + l <= 6; ++l) {
      const auto blocks = check_null_pair(m, l, kBoth);
      const auto swapped = check_null_pair(l, m, kBoth, given);
      const auto full = check_null_pair(m, l, kBoth, generic);
      CAPTURE(m);
      CAPTURE(l);
      CHECK(blocks.consensus);
      CHECK(blocks.is_null == swapped.is_null);
      CHECK(blocks.is_null == full.is_null);
      CHECK(blocks.verdicts[0].ideal_dimension == full.verdicts[0].ideal_dimension);
      CHECK(blocks.is_null == blocks.parity_prediction());
      if (!blocks.is_null) CHECK_FALSE(blocks.verdicts[0].witness.empty());
    }
  }
}

TEST_CASE("column guard") {
  NullPairOptions tight;
  tight.max_columns = 100;
  CHECK_THROWS_AS(check_null_pair(3, 3, kBoth, tight), ResourceLimitError);
  CHECK_NOTHROW(check_null_pair(1, 7, kBoth, tight));
  CHECK_THROWS(check_null_pair(0, 2, kBoth));
  CHECK_THROWS(check_null_pair(2, 2, std::vector<ScalarMode>{}));
}

TEST_CASE("scan") {
  const auto scan = scan_null_pairs(5, kBoth);
  CHECK(scan.pairs.size() == 6);
  CHECK(scan.not_null == std::vector<std::pair<int, int>>{{2, 2}});
  CHECK(scan.disagreements.empty());
  CHECK(scan.consensus);
}

TEST_CASE("S element and R table") {
  const auto x = [](int k) { return NCPoly::generator(5, k); };
  const NCPoly expected = commutator(x(1), x(2)) * commutator(x(3), commutator(x(4), x(5))) +
                          commutator(x(3), x(2)) * commutator(x(1), commutator(x(4), x(5)));
  CHECK(s_element(5, 1, 2, 3, 4, 5) == expected);
  CHECK(r_terms().size() == 13);
  for (const auto& t : r_terms()) {
    CHECK(t.den > 0);
    for (int a : t.args) CHECK((a >= 0 && a < 5));
  }
}

TEST_CASE("four-term identity") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2), c = random_poly(rng, 3, 2),
               d = random_poly(rng, 3, 2);
    CHECK(four_term_defect(a, b, c, d).is_zero());
  }
}

TEST_CASE("R identity") {
  CHECK(verify_r_identity(1, 2, 3, 4, 5));
  CHECK(verify_r_identity(1, 1, 2, 3, 4));
  CHECK(verify_r_identity(2, 1, 1, 1, 3, ScalarMode::mod(kDefaultPrime)));
  CHECK(verify_r_identity(1, 2, 3, 4, 5, ScalarMode::mod(7)));
  CHECK_THROWS(verify_r_identity(1, 2, 3, 4, 5, ScalarMode::mod(3)));
  // The right-hand side computed directly.
  const auto x = [](int k) { return NCPoly::generator(5, k); };
  const NCPoly lhs = commutator(x(1), x(2)) * commutator(x(3), commutator(x(4), x(5)));
  const NCPoly rhs = (r_element(5, 1, 2, 5, 4, 3) - r_element(5, 1, 2, 4, 5, 3)) * Scalar(kQ, 1, 3);
  CHECK(lhs == rhs);
}

TEST_CASE("product containment") {
  const auto delta = MultiDegree::multilinear(4);
  const auto gl = check_gupta_levin(2, 2, delta, kQ);
  CHECK(gl.holds);
  CHECK(gl.target == 2);
  CHECK(gl.products > 0);
  // [x1,x2][x3,x4] is not in M_3.
  const auto too_deep = check_gupta_levin(2, 2, delta, kQ, 3);
  CHECK_FALSE(too_deep.holds);
  CHECK(too_deep.witness.has_value());
  CHECK(check_gupta_levin(2, 3, MultiDegree{2, 1, 1, 1}, kQ).holds);
  CHECK_THROWS(check_gupta_levin(1, 2, delta, kQ));
}

TEST_CASE("triple bracket containment") {
  CHECK(check_triple_bracket(1, 1, 1, MultiDegree{1, 1, 1}, kQ).holds);
  const auto r = check_triple_bracket(2, 2, 1, MultiDegree::multilinear(5), kQ);
  CHECK(r.holds);
  CHECK(r.target == 2);
  CHECK(check_triple_bracket(2, 1, 2, MultiDegree{2, 1, 1, 1}, ScalarMode::mod(kDefaultPrime)).holds);
}
