#include <doctest.h>

#include "lienil/report.hpp"

using namespace lienil;
using report::json;

namespace {
bool keys_sorted(const json& j) {
  if (j.is_object()) {
    std::string prev;
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first && !(prev < it.key())) return false;
      prev = it.key();
      first = false;
      if (!keys_sorted(it.value())) return false;
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (!keys_sorted(e)) return false;
    }
  }
  return true;
}
}  // namespace

TEST_CASE("pair payload") {
  const auto r = check_null_pair(2, 2, {ScalarMode::exact(), ScalarMode::mod(kDefaultPrime)});
  const json j = report::pair_json(r);
  CHECK(j["is_null"] == false);
  CHECK(j["parity_prediction"] == false);
  CHECK(j["agrees_with_parity"] == true);
  CHECK(j["verdicts"].size() == 2);
  CHECK(j["verdicts"][1]["mode"] == "mod2147483647");
  CHECK(keys_sorted(j));
  CHECK(j.dump() == report::pair_json(check_null_pair(2, 2, {ScalarMode::exact(), ScalarMode::mod(kDefaultPrime)})).dump());
  CHECK_FALSE(report::pair_timing(r).contains("is_null"));
}

TEST_CASE("envelope and payloads") {
  const auto q = ScalarMode::exact();
  const auto lambda = lambda_weights(2, 3, 6, q);
  const json h = report::hilbert_json(2, 3, hilbert_q(2, 3, 6, q), lambda, q);
  CHECK(h["series"] == json::array({1, 2, 4, 6, 8, 10, 12}));
  CHECK(h["lambda"]["dimension"] == 2);
  const json env = report::envelope("hilbert", h);
  CHECK(env.size() == 3);
  CHECK(env["command"] == "hilbert");
  CHECK(env["timing"].is_object());
  CHECK(keys_sorted(env));

  const json c = report::corollary_json(verify_corollary_k3(2, q));
  CHECK(c["passed"] == true);
  CHECK(c["decomposition"]["text"] == "1 * s(2,1) + 1 * s(2,2)");
  CHECK(keys_sorted(c));

  const json p = report::presentation_json(verify_presentation(2, 3, 4, q, "quadratic"));
  CHECK(p["dropped_family"] == "quadratic");
  CHECK(p.contains("first_failure"));
  CHECK(keys_sorted(p));
}
