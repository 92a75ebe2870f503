// Command-line front end: null pairs, Hilbert series and the verification suite.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "lienil/report.hpp"

using namespace lienil;
using report::json;

namespace {

enum Exit { kOk = 0, kInconsistent = 1, kResource = 2, kBadArgs = 3 };

struct Config {
  std::string mode = "auto";  // auto | exact | mod | both
  std::vector<uint64_t> primes;
  std::string cache_dir;
  uint64_t max_columns = kDefaultMaxColumns;
  int jobs = 1;
  std::string output;
  bool timing = true;
  int n = 2;
  int i = 3;
  int max_degree = -1;
  int m = 2;
  int l = 3;
  int max_sum = 7;
  std::string method = "blocks";
  std::string name;
  std::string drop_family;
  std::string delta;
  std::vector<int> triple{2, 2, 3};
  int samples = 10;
  uint64_t seed = 1;
};

/// In auto mode the null-pair commands use Exact plus every prime when Exact is
/// feasible and the primes alone otherwise; all other commands use Exact.
std::vector<ScalarMode> resolve_modes(const Config& c, bool exact_feasible, bool auto_adds_primes = false) {
  std::vector<uint64_t> primes = c.primes;
  if (primes.empty()) primes = {kDefaultPrime, kSecondPrime};
  std::vector<ScalarMode> out;
  const bool want_exact = c.mode == "exact" || c.mode == "both" || (c.mode == "auto" && exact_feasible);
  const bool want_mod =
      c.mode == "mod" || c.mode == "both" || (c.mode == "auto" && (auto_adds_primes || !exact_feasible));
  if (want_exact) out.push_back(ScalarMode::exact());
  if (want_mod) {
    for (uint64_t p : primes) out.push_back(ScalarMode::mod(p));
  }
  if (out.empty()) throw std::invalid_argument("unknown mode '" + c.mode + "'");
  return out;
}

MultiDegree parse_delta(const std::string& text, int fallback_n) {
  if (text.empty()) return MultiDegree::multilinear(fallback_n);
  std::vector<int> e;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) e.push_back(std::stoi(tok));
  return MultiDegree(e);
}

/// Payload without the fields that legitimately differ between scalar modes.
json drop_mode(json j) {
  if (!j.is_object()) return j;
  for (const char* key : {"mode", "witness", "associativity_witness", "relation_witness", "unsound_relation"}) {
    j.erase(key);
  }
  return j;
}

/// Runs fn once per mode; the result lists every run and whether they agree.
template <class Fn>
json per_mode(const std::vector<ScalarMode>& modes, Fn&& fn, bool& passed) {
  json runs = json::array();
  passed = true;
  bool consensus = true;
  for (const auto mode : modes) {
    auto [payload, ok] = fn(mode);
    passed = passed && ok;
    if (!runs.empty() && drop_mode(runs.front()) != drop_mode(payload)) consensus = false;
    runs.push_back(std::move(payload));
  }
  return {{"runs", runs}, {"consensus", consensus}, {"passed", passed && consensus}};
}

json verify(const Config& c, bool& passed) {
  const std::string& name = c.name;
  LcsStore& store = default_store();
  if (name == "q3-presentation" || name == "q4-presentation") {
    const int i = name == "q3-presentation" ? 3 : 4;
    const int d = c.max_degree >= 0 ? c.max_degree : default_presentation_degree(c.n, i);
    std::optional<std::string> drop;
    if (!c.drop_family.empty()) drop = c.drop_family;
    return per_mode(resolve_modes(c, true), [&](ScalarMode mode) {
      const auto r = verify_presentation(c.n, i, d, mode, drop, store);
      return std::pair{report::presentation_json(r), r.passed};
    }, passed);
  }
  if (name == "fs-model") {
    const int d = c.max_degree >= 0 ? c.max_degree : (c.n == 2 ? 5 : 4);
    return per_mode(resolve_modes(c, true), [&](ScalarMode mode) {
      const auto r = fs_check(c.n, d, mode, store);
      return std::pair{report::fs_json(r), r.passed};
    }, passed);
  }
  if (name == "corollary-k3") {
    std::optional<int> d;
    if (c.max_degree >= 0) d = c.max_degree;
    return per_mode(resolve_modes(c, true), [&](ScalarMode mode) {
      const auto r = verify_corollary_k3(c.n, mode, d, store);
      return std::pair{report::corollary_json(r), r.passed};
    }, passed);
  }
  if (name == "gupta-levin") {
    const MultiDegree delta = parse_delta(c.delta, 6);
    return per_mode(resolve_modes(c, true), [&](ScalarMode mode) {
      const auto r = check_gupta_levin(c.m, c.l, delta, mode, std::nullopt, store);
      json j = report::containment_json(r);
      j["m"] = c.m;
      j["l"] = c.l;
      j["delta"] = delta.exponents();
      j["mode"] = mode.tag();
      return std::pair{j, r.holds};
    }, passed);
  }
  if (name == "triple-bracket") {
    if (c.triple.size() != 3) throw std::invalid_argument("--triple takes three indices");
    const MultiDegree delta = parse_delta(c.delta, 7);
    return per_mode(resolve_modes(c, true), [&](ScalarMode mode) {
      const auto r = check_triple_bracket(c.triple[0], c.triple[1], c.triple[2], delta, mode, store);
      json j = report::containment_json(r);
      j["indices"] = c.triple;
      j["delta"] = delta.exponents();
      j["mode"] = mode.tag();
      return std::pair{j, r.holds};
    }, passed);
  }
  if (name == "s-in-m4") {
    return per_mode(resolve_modes(c, true), [&](ScalarMode mode) {
      const NCPoly s = s_element(5, 1, 2, 3, 4, 5, mode);
      const bool in = member_of_m(s, 4, mode, store);
      return std::pair{json{{"element", "S(1,2,3,4,5)"}, {"terms", s.size()}, {"in_M4", in}, {"mode", mode.tag()}},
                       in};
    }, passed);
  }
  if (name == "r-identity") {
    return per_mode(resolve_modes(c, true), [&](ScalarMode mode) {
      std::mt19937_64 rng(c.seed);
      std::uniform_int_distribution<int> pick(1, 5);
      json tuples = json::array();
      bool all = true;
      auto run = [&](std::array<int, 5> t) {
        const bool ok = verify_r_identity(t[0], t[1], t[2], t[3], t[4], mode);
        all = all && ok;
        tuples.push_back({{"indices", t}, {"holds", ok}});
      };
      run({1, 2, 3, 4, 5});
      for (int s = 0; s < c.samples; ++s) run({pick(rng), pick(rng), pick(rng), pick(rng), pick(rng)});
      return std::pair{json{{"tuples", tuples}, {"r_terms", r_terms().size()}, {"holds", all}, {"mode", mode.tag()}},
                       all};
    }, passed);
  }
  if (name == "four-term") {
    return per_mode(resolve_modes(c, true), [&](ScalarMode mode) {
      const int n = 5;
      auto x = [&](int k) { return NCPoly::generator(n, k, mode); };
      uint64_t checked = 0;
      bool all = true;
      for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
          for (int cc = 1; cc <= 4; ++cc)
            for (int dd = 1; dd <= 4; ++dd) {
              ++checked;
              all = all && verify_four_term_identity(x(a), x(b), x(cc), x(dd));
            }
      for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
          for (int cc = 1; cc <= 5; ++cc)
            for (int l = 1; l <= 5; ++l)
              for (int m = l + 1; m <= 5; ++m) {
                ++checked;
                all = all && verify_four_term_identity(x(a), x(b), x(cc), commutator(x(l), x(m)));
              }
      return std::pair{json{{"instances", checked}, {"holds", all}, {"mode", mode.tag()}}, all};
    }, passed);
  }
  throw std::invalid_argument("unknown verification '" + name + "'");
}

int emit(const Config& c, json doc) {
  if (!c.timing) doc.erase("timing");
  const std::string text = doc.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.output);
    if (!out) throw std::invalid_argument("cannot write " + c.output);
    out << text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Lower central series quotients of free algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--mode", c.mode, "exact, mod, both, or auto")
      ->check(CLI::IsMember({"auto", "exact", "mod", "both"}));
  app.add_option("--prime", c.primes, "prime for mod mode (repeatable)");
  app.add_option("--cache-dir", c.cache_dir, "directory for cached M_i components")->envname("LIENIL_CACHE_DIR");
  app.add_option("--max-columns", c.max_columns, "refuse components with more columns");
  app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--output", c.output, "write JSON here instead of stdout");
  app.add_flag("!--no-timing", c.timing, "omit the timing field");

  auto* nullpair = app.add_subcommand("nullpair", "test whether (m, l) is a null pair");
  nullpair->add_option("--m", c.m)->required()->check(CLI::PositiveNumber);
  nullpair->add_option("--l", c.l)->required()->check(CLI::PositiveNumber);
  nullpair->add_option("--method", c.method)->check(CLI::IsMember({"blocks", "generic"}));

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of Q_{n,i} and the Lambda weights");
  hilbert->add_option("--n", c.n)->required()->check(CLI::Range(1, 8));
  hilbert->add_option("--i", c.i)->required()->check(CLI::Range(2, 12));
  hilbert->add_option("--max-degree", c.max_degree)->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand("verify", "run one verification");
  verify_cmd->add_option("name", c.name)
      ->required()
      ->check(CLI::IsMember({"q3-presentation", "q4-presentation", "fs-model", "corollary-k3", "gupta-levin",
                             "triple-bracket", "s-in-m4", "r-identity", "four-term"}));
  verify_cmd->add_option("--n", c.n)->check(CLI::Range(2, 8));
  verify_cmd->add_option("--max-degree", c.max_degree)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--drop-family", c.drop_family, "presentation mutation test");
  verify_cmd->add_option("--m", c.m);
  verify_cmd->add_option("--l", c.l);
  verify_cmd->add_option("--delta", c.delta, "comma-separated multidegree");
  verify_cmd->add_option("--triple", c.triple)->expected(3);
  verify_cmd->add_option("--samples", c.samples, "random tuples for r-identity");
  verify_cmd->add_option("--seed", c.seed);

  auto* scan = app.add_subcommand("scan", "null-pair table against the parity prediction");
  scan->add_option("--max-sum", c.max_sum)->required()->check(CLI::Range(2, 12));

  auto* cache = app.add_subcommand("cache", "inspect or clear the component cache");
  std::string cache_action = "list";
  cache->add_option("action", cache_action)->check(CLI::IsMember({"list", "clear"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    LcsOptions opts;
    if (!c.cache_dir.empty()) opts.cache_dir = c.cache_dir;
    opts.max_columns = c.max_columns;
    opts.jobs = c.jobs;
    default_store().set_options(opts);

    if (*nullpair) {
      NullPairOptions o;
      o.method = c.method == "blocks" ? NullPairMethod::kBlocks : NullPairMethod::kGeneric;
      o.max_columns = c.max_columns;
      const auto r = check_null_pair(c.m, c.l, resolve_modes(c, c.m + c.l <= 7, true), o);
      emit(c, report::envelope("nullpair", report::pair_json(r), report::pair_timing(r)));
      return r.consensus ? kOk : kInconsistent;
    }
    if (*scan) {
      NullPairOptions o;
      o.max_columns = c.max_columns;
      const auto s = scan_null_pairs(c.max_sum, resolve_modes(c, c.max_sum <= 7, true), o);
      emit(c, report::envelope("scan", report::scan_json(s), report::scan_timing(s)));
      return s.consensus ? kOk : kInconsistent;
    }
    const auto started = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return json{{"elapsed_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count()}};
    };
    if (*hilbert) {
      const int d = c.max_degree >= 0 ? c.max_degree : default_max_degree(c.n, c.i);
      bool passed = true;
      json result = per_mode(resolve_modes(c, true), [&](ScalarMode mode) {
        const auto series = hilbert_q(c.n, c.i, d, mode);
        const auto lambda = lambda_weights(c.n, c.i, d, mode);
        return std::pair{report::hilbert_json(c.n, c.i, series, lambda, mode), true};
      }, passed);
      emit(c, report::envelope("hilbert", result, elapsed()));
      return result["consensus"].get<bool>() ? kOk : kInconsistent;
    }
    if (*verify_cmd) {
      bool passed = false;
      json result = verify(c, passed);
      result["name"] = c.name;
      emit(c, report::envelope("verify", result, elapsed()));
      return result["passed"].get<bool>() ? kOk : kInconsistent;
    }
    if (*cache) {
      if (c.cache_dir.empty()) throw std::invalid_argument("cache needs --cache-dir or LIENIL_CACHE_DIR");
      json files = json::array();
      uint64_t bytes = 0;
      if (std::filesystem::exists(c.cache_dir)) {
        std::vector<std::filesystem::path> paths;
        for (const auto& e : std::filesystem::directory_iterator(c.cache_dir)) {
          if (e.is_regular_file() && e.path().extension() == ".span") paths.push_back(e.path());
        }
        std::sort(paths.begin(), paths.end());
        for (const auto& p : paths) {
          bytes += std::filesystem::file_size(p);
          files.push_back(p.filename().string());
          if (cache_action == "clear") std::filesystem::remove(p);
        }
      }
      emit(c, report::envelope("cache", {{"action", cache_action}, {"files", files}, {"bytes", bytes}}));
      return kOk;
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad arguments: " << e.what() << "\n";
    return kBadArgs;
  } catch (const std::out_of_range& e) {
    std::cerr << "bad arguments: " << e.what() << "\n";
    return kBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconsistent;
  }
  return kOk;
}
