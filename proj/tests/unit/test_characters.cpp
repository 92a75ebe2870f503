#include <doctest.h>

#include <random>

#include "lienil/characters.hpp"
#include "lienil/multilinear.hpp"

using namespace lienil;

TEST_CASE("partitions") {
  CHECK(Partition({2, 1, 0, 0}).parts() == std::vector<int>{2, 1});
  CHECK(Partition{3, 1}.to_string() == "(3,1)");
  CHECK(Partition{3, 1}.as_weight(3) == MultiDegree{3, 1, 0});
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, -1}));
  CHECK_THROWS(Partition{1, 1, 1}.as_weight(2));
}

TEST_CASE("weyl dimension") {
  CHECK(weyl_dimension(Partition{1}, 5) == 5);
  CHECK(weyl_dimension(Partition{2, 1}, 3) == 8);
  CHECK(weyl_dimension(Partition{2, 2}, 3) == 6);
  CHECK(weyl_dimension(Partition{2, 2}, 2) == 1);
  CHECK(weyl_dimension(Partition{1, 1, 1}, 2) == 0);
}

TEST_CASE("kostka weights sum to the weyl dimension") {
  for (int size = 0; size <= 6; ++size) {
    for (const auto& parts : size ? partitions_of(size) : std::vector<std::vector<int>>{{}}) {
      const Partition lambda(parts);
      for (int n = 1; n <= 4; ++n) {
        const auto table = kostka_weights(lambda, n);
        CAPTURE(lambda.to_string());
        CAPTURE(n);
        CHECK(table.total() == static_cast<int64_t>(weyl_dimension(lambda, n)));
        CHECK(table.is_symmetric());
        if (lambda.length() <= n) CHECK(table.at(lambda.as_weight(n)) == 1);
      }
    }
  }
}

TEST_CASE("decomposition round trip") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> mult(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    SchurDecomposition dec;
    for (int size = 1; size <= 5; ++size) {
      for (const auto& parts : partitions_of(size)) {
        if (parts.size() > 3) continue;
        if (const int m = mult(rng) - 2; m > 0) dec.multiplicities[Partition(parts)] = m;
      }
    }
    CHECK(schur_decompose(character_of(dec, 3, 5)) == dec);
  }
  SchurDecomposition two;
  two.multiplicities = {{Partition{2, 1}, 1}, {Partition{2, 2}, 1}};
  CHECK(two.to_string() == "1 * s(2,1) + 1 * s(2,2)");
  CHECK(SchurDecomposition{}.to_string() == "0");
}

TEST_CASE("decomposition errors") {
  WeightTable asym{2, 1, {}};
  asym.set(MultiDegree{1, 0}, 1);
  CHECK_THROWS_AS(schur_decompose(asym), std::invalid_argument);
  WeightTable negative = kostka_weights(Partition{1}, 2);
  for (auto& [nu, m] : negative.entries) m = -m;
  CHECK_THROWS_AS(schur_decompose(negative), InconsistencyError);
  // A symmetric table with a weight that no dominant term explains.
  WeightTable bad = kostka_weights(Partition{2}, 2);
  bad.set(MultiDegree{1, 1}, 0);
  CHECK_THROWS_AS(schur_decompose(bad), InconsistencyError);
}

TEST_CASE("kernel weights") {
  const auto q = ScalarMode::exact();
  const auto k2 = k_weights(2, 3, q);
  CHECK(k2.weights.total() == 3);
  CHECK(k2.upper.dimension - k2.lower.dimension == 3);
  const auto k3 = k_weights(3, 3, ScalarMode::mod(kDefaultPrime));
  CHECK(k3.weights.total() == 14);
  CHECK(k3.weights.is_symmetric());
  CHECK_THROWS_AS(k_weights(2, 3, q, 2), InconsistencyError);

  const auto c = verify_corollary_k3(2, q);
  CHECK(c.passed);
  CHECK(c.decomposition.to_string() == "1 * s(2,1) + 1 * s(2,2)");
}
