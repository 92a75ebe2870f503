#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "lienil/lcs.hpp"
#include "oracle.hpp"

using namespace lienil;

namespace {
const ScalarMode kQ = ScalarMode::exact();
}

TEST_CASE("spanning generator examples") {
  const auto g = m_spanning_generators(2, 2, MultiDegree{1, 1});
  CHECK(echelonize(g, MultiDegree{1, 1}, kQ).rank() == 1);
  CHECK(echelonize(m_spanning_generators(2, 3, MultiDegree{2, 1}), MultiDegree{2, 1}, kQ).rank() == 1);
  CHECK(m_spanning_generators(2, 3, MultiDegree{1, 1}).empty());
  const auto l = l_spanning_monomial_entries(2, 1, MultiDegree{2, 0});
  REQUIRE(l.size() == 1);
  CHECK(l[0] == NCPoly::parse("x1*x1", 2));
  CHECK(l_spanning_monomial_entries(2, 2, MultiDegree{1, 1}).size() == 2);
}

TEST_CASE("reduced spanning set matches the definition") {
  // Definition: u*[w_1..w_i]*v over all nonempty words w_k, ranked by the dense oracle.
  for (const auto& delta : {MultiDegree{2, 1}, MultiDegree{2, 2}, MultiDegree{3, 1}, MultiDegree{2, 1, 1},
                            MultiDegree{1, 1, 1, 1}, MultiDegree{2, 2, 1}, MultiDegree{1, 1, 1, 1, 1}}) {
    for (int i = 2; i <= delta.total(); ++i) {
      const size_t expected = oracle::rank(oracle::m_by_definition(delta, i), delta);
      const auto reduced = echelonize(m_spanning_generators(delta.n(), i, delta), delta, kQ);
      CAPTURE(delta.to_string());
      CAPTURE(i);
      CHECK(reduced.rank() == expected);
      CHECK(default_store().component(delta.n(), i, delta, kQ).basis->rank() == expected);
    }
  }
}

TEST_CASE("brackets of single letters do not span M_3 in four letters") {
  const MultiDegree delta = MultiDegree::multilinear(4);
  const auto letters =
      echelonize(m_spanning_generators(4, 3, delta, kQ, SpanningSet::kLetterEntries), delta, kQ).rank();
  CHECK(letters == 14);
  CHECK(oracle::rank(oracle::m_by_definition(delta, 3), delta) == 16);
}

TEST_CASE("membership examples") {
  const auto x = [](int n, int k) { return NCPoly::generator(n, k); };
  CHECK(member_of_m(commutator(commutator(x(3, 1), x(3, 2)), x(3, 3)), 3, kQ));
  CHECK_FALSE(member_of_m(commutator(x(2, 1), x(2, 2)), 3, kQ));
  const NCPoly v = commutator(x(5, 1), x(5, 2)) * commutator(x(5, 3), commutator(x(5, 4), x(5, 5)));
  CHECK(member_of_m(v, 4, kQ));
  CHECK_FALSE(member_of_m(v, 5, kQ));
}

TEST_CASE("q dimensions") {
  for (const auto& delta : {MultiDegree{3, 0}, MultiDegree{2, 2}, MultiDegree{1, 2, 1}}) {
    CHECK(q_dimension(delta.n(), 2, delta, kQ) == 1);
    CHECK(q_dimension(delta.n(), 1, delta, kQ) == 0);
  }
  uint64_t deg2 = 0, deg3 = 0;
  for (const auto& delta : multidegrees_of_total(2, 2)) deg2 += q_dimension(2, 3, delta, kQ);
  for (const auto& delta : multidegrees_of_total(2, 3)) deg3 += q_dimension(2, 4, delta, kQ);
  CHECK(deg2 == 4);
  CHECK(deg3 == 8);
}

TEST_CASE("hilbert series") {
  CHECK(hilbert_q(2, 2, 4, kQ).coefficients == std::vector<uint64_t>{1, 2, 3, 4, 5});
  CHECK(hilbert_q(2, 3, 6, kQ).coefficients == std::vector<uint64_t>{1, 2, 4, 6, 8, 10, 12});
  for (int i = 2; i <= 5; ++i) CHECK(hilbert_q(3, i, 1, kQ).coefficients[1] == 3);
}

TEST_CASE("nesting, ideal closure and mode agreement") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 3; ++n) {
    for (int d = 2; d <= 5; ++d) {
      for (const auto& delta : multidegrees_of_total(n, d)) {
        for (int i = 2; i < d; ++i) {
          const auto upper = default_store().component(n, i + 1, delta, kQ).basis;
          const auto lower = default_store().component(n, i, delta, kQ).basis;
          for (const auto& row : upper->rows()) CHECK(lower->contains(row));
          const auto q = q_dimension(n, i, delta, kQ);
          CHECK(q_dimension(n, i, delta, ScalarMode::mod(kDefaultPrime)) == q);
          CHECK(q_dimension(n, i, delta, ScalarMode::mod(kSecondPrime)) == q);
        }
      }
    }
  }
  // u * p * v stays in M_i.
  std::uniform_int_distribution<int> letter(1, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rows = default_store().component(2, 3, MultiDegree{2, 1}, kQ).basis->rows();
    const Word u{letter(rng)}, v{letter(rng), letter(rng)};
    const NCPoly moved = NCPoly::monomial(2, u, Scalar(kQ, 1)) * rows.front() * NCPoly::monomial(2, v, Scalar(kQ, 1));
    CHECK(member_of_m(moved, 3, kQ));
  }
}

TEST_CASE("lambda weights") {
  const auto l2 = lambda_weights(3, 2, 4, kQ);
  CHECK(l2.entries.size() == 1);
  CHECK(l2.at(MultiDegree(3)) == 1);

  const auto l23 = lambda_weights(2, 3, 6, kQ);
  CHECK(l23.total() == 2);
  CHECK(l23.at(MultiDegree{1, 1}) == 1);
  CHECK(l23.is_symmetric());

  const auto l24 = lambda_weights(2, 4, 8, kQ);
  CHECK(l24.total() == 5);
  CHECK(l24.is_symmetric());

  // (3,4) reaches degree 11; exact runs there belong to the acceptance binary.
  const auto p = ScalarMode::mod(kDefaultPrime);
  for (auto [n, i, dim, mode] : {std::tuple{2, 3, 2, kQ}, std::tuple{3, 3, 4, kQ}, std::tuple{3, 4, 18, p}}) {
    const auto r = lambda_dim(n, i, default_max_degree(n, i), mode);
    CHECK(r.dimension == dim);
    CHECK(r.stabilized);
  }
  // Truncating at the top degree leaves no room for the window.
  CHECK_FALSE(lambda_dim(2, 3, 2, kQ).stabilized);
  CHECK_THROWS(lambda_weights(2, 1, 3, kQ));
}

TEST_CASE("hilbert series is the product of the Lambda and polynomial series") {
  for (auto [n, i, d] : {std::tuple{2, 3, 6}, std::tuple{2, 4, 7}, std::tuple{3, 4, 5}}) {
    const auto h = hilbert_q(n, i, d, kQ).coefficients;
    const auto lam = lambda_weights(n, i, d, kQ).by_degree();
    for (int k = 0; k <= d; ++k) {
      int64_t conv = 0;
      for (int j = 0; j <= k; ++j) {
        // dim of degree-(k-j) polynomials in n variables
        const auto polys = static_cast<int64_t>(multidegrees_of_total(n, k - j).size());
        conv += lam[static_cast<size_t>(j)] * polys;
      }
      CHECK(conv == static_cast<int64_t>(h[static_cast<size_t>(k)]));
    }
  }
}

TEST_CASE("store guard and disk cache") {
  LcsStore small(LcsOptions{std::nullopt, 100, 1, true});
  CHECK_THROWS_AS(small.component(5, 3, MultiDegree::multilinear(5), kQ), ResourceLimitError);
  CHECK(small.size() == 0);

  const auto dir = std::filesystem::temp_directory_path() / "lienil-unit-cache";
  std::filesystem::remove_all(dir);
  LcsStore first(LcsOptions{dir, kDefaultMaxColumns, 1, true});
  const auto a = first.component(3, 3, MultiDegree{2, 1, 1}, kQ);
  CHECK(std::filesystem::exists(dir / LcsStore::cache_file_name(3, 3, MultiDegree{2, 1, 1}, kQ)));
  LcsStore second(LcsOptions{dir, kDefaultMaxColumns, 1, true});
  const auto b = second.component(3, 3, MultiDegree{2, 1, 1}, kQ);
  CHECK(spans_equal(*a.basis, *b.basis));

  const auto file = dir / LcsStore::cache_file_name(3, 3, MultiDegree{2, 2, 0}, kQ);
  std::filesystem::create_directories(dir);
  std::ofstream(file) << "lienil-span 1\nmode exact\ndelta 9 9\n";
  LcsStore third(LcsOptions{dir, kDefaultMaxColumns, 1, true});
  CHECK(third.component(3, 3, MultiDegree{2, 2, 0}, kQ).basis->rank() ==
        oracle::rank(oracle::m_by_definition(MultiDegree{2, 2, 0}, 3), MultiDegree{2, 2, 0}));
  std::filesystem::remove_all(dir);
}

TEST_CASE("parallel q weights equal serial ones") {
  LcsStore serial(LcsOptions{std::nullopt, kDefaultMaxColumns, 1, false});
  LcsStore parallel(LcsOptions{std::nullopt, kDefaultMaxColumns, 4, true});
  CHECK(q_weights(3, 4, 5, kQ, serial) == q_weights(3, 4, 5, kQ, parallel));
}

TEST_CASE("block route agrees with component echelon forms") {
  LcsOptions blocks_opts{std::nullopt, kDefaultMaxColumns, 1, true, QMethod::kBlocks};
  LcsOptions echelon_opts{std::nullopt, kDefaultMaxColumns, 1, true, QMethod::kEchelon};
  for (auto mode : {kQ, ScalarMode::mod(kDefaultPrime)}) {
    for (auto [n, i, d] : {std::tuple{2, 3, 7}, std::tuple{3, 3, 6}, std::tuple{2, 4, 7}, std::tuple{3, 4, 6},
                           std::tuple{4, 2, 5}, std::tuple{4, 5, 6}}) {
      LcsStore blocks(blocks_opts), echelon(echelon_opts);
      CAPTURE(n);
      CAPTURE(i);
      CHECK(q_weights(n, i, d, mode, blocks) == q_weights(n, i, d, mode, echelon));
    }
  }
}

TEST_CASE("quotient Specht multiplicities") {
  LcsStore store;
  // Q_{N,2} is the symmetric algebra: only the trivial module survives.
  const auto q2 = store.quotient_specht(5, 2, kQ);
  for (const auto& [shape, mult] : q2) CHECK(mult == (shape == std::vector<int>{5} ? 1u : 0u));
  CHECK(resolve_q_method(2, 10, kQ, store.options()) == QMethod::kEchelon);
  CHECK(resolve_q_method(4, 11, kQ, store.options()) == QMethod::kBlocks);
  CHECK(resolve_q_method(4, 11, ScalarMode::mod(7), store.options()) == QMethod::kEchelon);
}
