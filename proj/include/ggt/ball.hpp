#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ggt/oracle.hpp"
#include "ggt/word.hpp"

namespace ggt {

struct BallBuildOptions {
  // With permissive set, an Unknown verdict during identification treats the
  // candidate as a new element and downgrades the certificate instead of
  // aborting.
  bool permissive = false;
};

// BFS ball of a Cayley graph centered at the identity. Element 0 is the
// identity; representatives are the shortlex-least words discovered.
class Ball {
 public:
  int size() const { return static_cast<int>(rep_.size()); }
  int radius() const { return radius_; }
  bool complete() const { return complete_; }
  Certificate certificate() const { return cert_; }
  const GroupOracle& oracle() const { return *oracle_; }
  OraclePtr oracle_ptr() const { return oracle_; }

  const Word& rep(int id) const { return rep_[static_cast<std::size_t>(id)]; }
  int depth(int id) const { return depth_[static_cast<std::size_t>(id)]; }
  // Neighbor under the signed letter of the given rank; -1 if outside the ball.
  std::int32_t neighbor(int id, int letter_rank) const {
    return adj_[static_cast<std::size_t>(id) * static_cast<std::size_t>(degree_) +
                static_cast<std::size_t>(letter_rank)];
  }
  int degree() const { return degree_; }

  // Element id of the (reduced) word, walking edges from the identity;
  // -1 when the walk leaves the ball.
  std::int32_t locate(const Word& w) const;

  // True when the oracle knows the full word metric, making distance() exact
  // for arbitrary pairs.
  bool has_exact_metric() const;

  // Graph distance d(x, y). Uses the oracle metric when available, otherwise
  // locates rep(x)^-1 rep(y); throws GuardViolation when not representable.
  int distance(int x, int y) const;

  friend Ball build_ball(OraclePtr oracle, int radius, BallBuildOptions opts);

 private:
  OraclePtr oracle_;
  int radius_ = 0;
  int degree_ = 0;
  bool complete_ = false;
  Certificate cert_ = Certificate::Certified;
  std::vector<Word> rep_;
  std::vector<int> depth_;
  std::vector<std::int32_t> adj_;
};

Ball build_ball(OraclePtr oracle, int radius, BallBuildOptions opts = {});

// I(x, y) = { p : d(x,p) + d(p,y) = d(x,y) }, as element ids sorted ascending.
std::vector<int> interval(const Ball& b, int x, int y);

// All geodesic edge-paths from x to y (as vertex id sequences); throws
// CapExceeded when more than cap exist.
std::vector<std::vector<int>> enumerate_geodesics(const Ball& b, int x, int y, int cap);

struct Homomorphism {
  OrderedAlphabet domain;
  OraclePtr codomain;
  std::vector<Word> images;  // one reduced codomain word per domain generator

  Word apply(const Word& w) const;
};

// "a->ab,b->B" over the given domain alphabet.
Homomorphism parse_homomorphism(const OrderedAlphabet& domain, OraclePtr codomain,
                                const std::string& spec);

struct InjectivityRadius {
  int value = 0;
  // True when injective on the whole computed ball (UNBOUNDED_UP_TO(radius)).
  bool unbounded_up_to = false;
  Certificate cert = Certificate::Certified;
  // Colliding pair when a collision bounds the radius.
  Word witness_u, witness_v;
};

InjectivityRadius injectivity_radius(const Homomorphism& h, const Ball& dom_ball);

}  // namespace ggt
