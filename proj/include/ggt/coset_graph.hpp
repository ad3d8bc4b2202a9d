#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ggt/oracle.hpp"
#include "ggt/presentation.hpp"

namespace ggt {

// Fixed-point coset-graph construction: the free-group ball of the given
// radius, repeatedly folded by identifications forced by tracing relators at
// every vertex. Merges are forced only, so two vertices in one class are
// always equal in the group.
class CosetGraph {
 public:
  CosetGraph(const Presentation& p, int radius, long long work_cap);

  int radius() const { return radius_; }
  bool stabilized() const { return stabilized_; }
  // Closed under every generator at every class with all relators satisfied;
  // the graph is then the exact Cayley graph of a finite quotient.
  bool complete() const { return complete_; }
  int class_count() const { return static_cast<int>(live_.size()); }
  int max_relator_length() const { return max_relator_length_; }

  // Class id reached by walking w from the identity; -1 when the walk hits an
  // undefined edge.
  std::int32_t trace(const Word& w) const;
  std::int32_t identity_class() const;
  int class_depth(std::int32_t cls) const;

  const OrderedAlphabet& alphabet() const { return alphabet_; }

 private:
  friend class BallClosureOracle;
  OrderedAlphabet alphabet_;
  int radius_;
  int degree_;
  int max_relator_length_ = 0;
  bool stabilized_ = false;
  bool complete_ = false;
  std::vector<std::int32_t> parent_;  // union-find
  std::vector<std::int32_t> adj_;     // per representative vertex
  std::vector<std::int32_t> live_;    // representative vertices, sorted
  std::vector<int> depth_;            // per vertex; valid on representatives

  std::int32_t find(std::int32_t v) const;
  std::int32_t edge(std::int32_t v, int r) const;
};

class BallClosureOracle : public GroupOracle {
 public:
  BallClosureOracle(const Presentation& p, int radius, long long work_cap);

  const OrderedAlphabet& alphabet() const override { return graph_.alphabet(); }
  Certificate certificate() const override {
    return graph_.complete() ? Certificate::Certified : Certificate::BestEffort;
  }
  Backend backend() const override {
    return graph_.complete() ? Backend::FiniteTable : Backend::BallClosure;
  }
  Verdict is_trivial(const Word& w) const override;
  std::optional<std::string> canonical_key(const Word& w) const override;
  std::optional<int> geodesic_length(const Word& w) const override;

  const CosetGraph& graph() const { return graph_; }
  // Set when any Nontrivial verdict relied on the stabilized-with-margin rule
  // rather than a complete table.
  bool caveat_flag() const { return caveat_flag_; }

 private:
  CosetGraph graph_;
  mutable bool caveat_flag_ = false;
};

std::shared_ptr<const BallClosureOracle> make_ball_closure_oracle(const Presentation& p,
                                                                  int radius,
                                                                  long long work_cap = 50'000'000);

// Ball closure that must complete; throws if the group does not close within
// the radius/work budget.
std::shared_ptr<const BallClosureOracle> make_finite_table_oracle(const Presentation& p,
                                                                  int radius,
                                                                  long long work_cap = 50'000'000);

}  // namespace ggt
