#include "lienil/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lienil {

namespace {

NCPoly x(int n, int i, ScalarMode mode) { return NCPoly::generator(n, i, mode); }

void push(RelationSet& set, std::string family, std::vector<int> indices, NCPoly value) {
  if (value.is_zero()) return;
  set.relations.push_back({std::move(family), std::move(indices), std::move(value)});
}

/// Calls fn with every tuple in {1..n}^k, lexicographically.
template <class Fn>
void for_each_tuple(int n, int k, Fn&& fn) {
  std::vector<int> t(static_cast<size_t>(k), 1);
  while (true) {
    fn(t);
    int pos = k - 1;
    while (pos >= 0 && t[static_cast<size_t>(pos)] == n) t[static_cast<size_t>(pos--)] = 1;
    if (pos < 0) return;
    ++t[static_cast<size_t>(pos)];
  }
}

void check_n(int n) {
  if (n < 2 || n > kMaxGenerators) throw std::invalid_argument("relation sets need 2 <= n");
}

}  // namespace

NCPoly y_element(int n, int i, int j, ScalarMode mode) { return commutator(x(n, i, mode), x(n, j, mode)); }

NCPoly z_element(int n, int i, int j, int k, ScalarMode mode) {
  return commutator(y_element(n, i, j, mode), x(n, k, mode));
}

std::vector<std::string> RelationSet::families() const {
  std::vector<std::string> out;
  for (const auto& r : relations) {
    if (std::find(out.begin(), out.end(), r.family) == out.end()) out.push_back(r.family);
  }
  return out;
}

size_t RelationSet::count(const std::string& family) const {
  return static_cast<size_t>(
      std::count_if(relations.begin(), relations.end(), [&](const Relation& r) { return r.family == family; }));
}

RelationSet RelationSet::without(const std::string& family) const {
  RelationSet out{n, i, mode, {}};
  for (const auto& r : relations) {
    if (r.family != family) out.relations.push_back(r);
  }
  return out;
}

RelationSet relations_q3(int n, ScalarMode mode) {
  check_n(n);
  RelationSet set{n, 3, mode, {}};
  for_each_tuple(n, 3, [&](const std::vector<int>& t) {
    push(set, "lie", t, commutator(x(n, t[0], mode), y_element(n, t[1], t[2], mode)));
  });
  for_each_tuple(n, 4, [&](const std::vector<int>& t) {
    const auto [i, j, k, l] = std::tuple(t[0], t[1], t[2], t[3]);
    push(set, "quadratic", t,
         y_element(n, i, j, mode) * y_element(n, k, l, mode) + y_element(n, i, k, mode) * y_element(n, j, l, mode));
  });
  return set;
}

RelationSet relations_q4(int n, ScalarMode mode) {
  check_n(n);
  RelationSet set{n, 4, mode, {}};
  for_each_tuple(n, 4, [&](const std::vector<int>& t) {
    push(set, "lie", t, commutator(x(n, t[0], mode), z_element(n, t[1], t[2], t[3], mode)));
  });
  for_each_tuple(n, 5, [&](const std::vector<int>& t) {
    push(set, "quadratic", t, y_element(n, t[0], t[1], mode) * z_element(n, t[2], t[3], t[4], mode));
  });
  for_each_tuple(n, 6, [&](const std::vector<int>& t) {
    const auto [i, j, k, l, m, p] = std::tuple(t[0], t[1], t[2], t[3], t[4], t[5]);
    const NCPoly ymp = y_element(n, m, p, mode);
    push(set, "cubic", t,
         (y_element(n, i, j, mode) * y_element(n, k, l, mode) + y_element(n, i, k, mode) * y_element(n, j, l, mode)) *
             ymp);
  });
  return set;
}

SpanBasis ideal_span(const RelationSet& rels, const MultiDegree& delta) {
  if (delta.n() != rels.n) throw std::invalid_argument("ideal_span: multidegree length differs from n");
  std::vector<NCPoly> vectors;
  std::set<std::string> seen;  // relations repeat across index tuples
  for (const auto& r : rels.relations) {
    if (!seen.insert(r.value.to_string()).second) continue;
    for (const auto& [rho, part] : homogeneous_components(r.value)) {
      const MultiDegree rest = delta - rho;
      if (rest.has_negative()) continue;
      for (const auto& mu : multidegrees_below(rest)) {
        const auto us = words_of_degree(mu);
        const auto vs = words_of_degree(rest - mu);
        for (const auto& u : us) {
          const NCPoly left = NCPoly::monomial(rels.n, u, Scalar(rels.mode, 1)) * part;
          for (const auto& v : vs) vectors.push_back(left * NCPoly::monomial(rels.n, v, Scalar(rels.mode, 1)));
        }
      }
    }
  }
  return echelonize(vectors, delta, rels.mode);
}

RelationIdeal::RelationIdeal(RelationSet rels) : rels_(std::move(rels)) {
  for (const auto& r : rels_.relations) {
    for (const auto& [rho, part] : homogeneous_components(r.value)) by_degree_[rho].push_back(&r);
  }
}

const SpanBasis& RelationIdeal::component(const MultiDegree& delta) {
  if (auto it = memo_.find(delta); it != memo_.end()) return it->second;
  const int n = rels_.n;
  const ScalarMode mode = rels_.mode;
  std::vector<NCPoly> vectors;
  for (int a = 1; a <= n; ++a) {
    if (delta[a - 1] == 0) continue;
    const MultiDegree lower = delta - MultiDegree::unit_vector(n, a);
    const auto rows = component(lower).rows();
    const NCPoly xa = NCPoly::generator(n, a, mode);
    for (const auto& row : rows) {
      vectors.push_back(xa * row);
      vectors.push_back(row * xa);
    }
  }
  if (auto it = by_degree_.find(delta); it != by_degree_.end()) {
    for (const Relation* r : it->second) vectors.push_back(homogeneous_components(r->value).at(delta));
  }
  return memo_.emplace(delta, echelonize(vectors, delta, mode)).first->second;
}

int default_presentation_degree(int n, int i) {
  if (i == 3 && n <= 3) return n == 2 ? 6 : 5;
  if (i == 4 && n <= 3) return n == 2 ? 7 : 6;
  return i + 2;
}

PresentationReport verify_presentation(int n, int i, int max_degree, ScalarMode mode,
                                       std::optional<std::string> drop_family, LcsStore& store) {
  if (i != 3 && i != 4) throw std::invalid_argument("presentations are known for i = 3 and i = 4");
  if (max_degree < i) throw std::invalid_argument("max_degree must be at least i");
  RelationSet rels = i == 3 ? relations_q3(n, mode) : relations_q4(n, mode);
  PresentationReport report;
  report.n = n;
  report.i = i;
  report.max_degree = max_degree;
  report.mode = mode;
  if (drop_family) {
    if (rels.count(*drop_family) == 0) throw std::invalid_argument("no relation family named " + *drop_family);
    rels = rels.without(*drop_family);
    report.dropped_family = drop_family;
  }
  for (const auto& f : rels.families()) report.relation_counts[f] = rels.count(f);

  for (const auto& r : rels.relations) {
    if (!member_of_m(r.value, i, mode, store)) {
      report.sound = false;
      report.unsound_relation = r.family + " " + r.value.to_string();
      break;
    }
  }

  RelationIdeal ideal(rels);
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& delta : multidegrees_of_total(n, d)) {
      const SpanBasis& generated = ideal.component(delta);
      const auto m = store.component(n, i, delta, mode);
      PresentationRecord rec{delta, generated.component().dimension(), generated.rank(), m.basis->rank(), false};
      rec.equal = rec.rank_ideal == rec.rank_m;
      if (!rec.equal && !report.first_failure) {
        report.first_failure = delta;
        for (const auto& v : m.basis->rows()) {
          if (!generated.contains(v)) {
            report.witness = v.to_string();
            break;
          }
        }
      }
      report.records.push_back(std::move(rec));
    }
  }
  report.passed = report.sound && !report.first_failure;
  if (report.passed) {
    report.statement = "verified up to degree " + std::to_string(max_degree);
  } else if (!report.sound) {
    report.statement = "a relation is not in M_" + std::to_string(i);
  } else {
    report.statement = "relations do not generate M_" + std::to_string(i) + " at " + report.first_failure->to_string();
  }
  return report;
}

}  // namespace lienil
