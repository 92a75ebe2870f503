#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lienil/lcs.hpp"

namespace lienil {

/// y_{ij} = [x_i, x_j]
NCPoly y_element(int n, int i, int j, ScalarMode mode = ScalarMode::exact());
/// z_{ijk} = [[x_i, x_j], x_k]
NCPoly z_element(int n, int i, int j, int k, ScalarMode mode = ScalarMode::exact());

struct Relation {
  std::string family;  // "lie", "quadratic" or "cubic"
  std::vector<int> indices;
  NCPoly value;
};

/// Labeled relations of a presentation of Q_{n,i}. Every index tuple is
/// enumerated; relations that expand to zero are dropped.
struct RelationSet {
  int n = 0;
  int i = 0;
  ScalarMode mode;
  std::vector<Relation> relations;

  std::vector<std::string> families() const;
  size_t count(const std::string& family) const;
  RelationSet without(const std::string& family) const;
};

/// [x_i, y_{jl}] ("lie") and y_{ij} y_{kl} + y_{ik} y_{jl} ("quadratic").
RelationSet relations_q3(int n, ScalarMode mode = ScalarMode::exact());
/// [x_i, z_{jlm}] ("lie"), y_{ij} z_{klm} ("quadratic") and
/// y_{ij} y_{kl} y_{mp} + y_{ik} y_{jl} y_{mp} ("cubic").
RelationSet relations_q4(int n, ScalarMode mode = ScalarMode::exact());

/// Span of all u*r*v of multidegree delta, u and v words, r a relation.
SpanBasis ideal_span(const RelationSet& rels, const MultiDegree& delta);

/// Two-sided ideal generated by a relation set, built degree by degree: the
/// delta piece is spanned by x_a*I[delta-e_a], I[delta-e_a]*x_a and the
/// relations of degree delta. Memoized.
class RelationIdeal {
 public:
  explicit RelationIdeal(RelationSet rels);
  const RelationSet& relations() const { return rels_; }
  const SpanBasis& component(const MultiDegree& delta);

 private:
  RelationSet rels_;
  std::map<MultiDegree, std::vector<const Relation*>> by_degree_;
  std::map<MultiDegree, SpanBasis> memo_;
};

struct PresentationRecord {
  MultiDegree delta;
  uint64_t dim_component = 0;
  uint64_t rank_ideal = 0;
  uint64_t rank_m = 0;
  bool equal = false;
};

struct PresentationReport {
  int n = 0;
  int i = 0;
  int max_degree = 0;
  ScalarMode mode;
  std::map<std::string, size_t> relation_counts;
  std::optional<std::string> dropped_family;
  bool sound = true;
  std::optional<std::string> unsound_relation;
  std::vector<PresentationRecord> records;  // every delta with |delta| <= max_degree, deglex
  bool passed = false;
  std::optional<MultiDegree> first_failure;
  std::optional<std::string> witness;  // element of M_i[delta] outside the relation ideal
  std::string statement;               // "verified up to degree D" / "failed at ..."
};

/// Smallest truncation used when none is given: 6/5 for i = 3 and 7/6 for
/// i = 4 (n = 2/3), i + 2 otherwise.
int default_presentation_degree(int n, int i);

/// Checks that the relations lie in M_i and generate M_i(A_n) in every
/// multidegree of total degree <= max_degree. drop_family removes one
/// labeled family first (mutation testing).
PresentationReport verify_presentation(int n, int i, int max_degree, ScalarMode mode,
                                       std::optional<std::string> drop_family = std::nullopt,
                                       LcsStore& store = default_store());

}  // namespace lienil
