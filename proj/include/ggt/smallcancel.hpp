#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ggt/hyperbolicity.hpp"
#include "ggt/oracle.hpp"
#include "ggt/presentation.hpp"

namespace ggt {

struct ScParams {
  double lambda = 1;  // quasi-geodesic multiplicative constant, >= 1
  double c = 0;       // quasi-geodesic additive constant, >= 0
  int eps = 0;        // connector length bound, >= 0
  double mu = 0;      // piece ratio, in (0,1)
  double rho = 0;     // minimum relator length, > 0
  std::optional<double> k_tilde;     // quasi-geodesicity threshold (no closed form)
  std::optional<double> delta;       // ambient hyperbolicity constant
  std::optional<double> r_stability; // quasi-geodesic stability constant

  void validate() const;
  // Parameter regime sufficient for the small-cancellation quotient lemmas.
  bool rho_regime_ok() const { return rho > 1e6 * eps / mu; }
};

struct EpsPieceWitness {
  int relator_a = -1;  // index of the piece's host word in the symmetrized list
  int relator_b = -1;  // index of the word carrying the matching subword
  Word u;              // the piece (prefix of word a)
  Word u_prime;        // subword of word b with u' = y u z in the group
  Word y, z;           // connectors, lengths <= eps
  bool inverted = false;      // u entered as u^{-1} (same-relator C' clause)
  bool same_relator = false;  // C' clause witness within one word
};

struct ClauseResult {
  bool evaluated = false;
  bool pass = false;
  std::string detail;
};

struct PieceReport {
  std::vector<Word> relators;  // the symmetrized set examined
  std::vector<int> max_piece_per_word;
  int max_piece = 0;
  double mu = 0;
  int eps = 0;
  // Maximal pieces, one per ordered pair of words (plus same-relator C'
  // witnesses); replaying each through the oracle re-verifies the clauses.
  std::vector<EpsPieceWitness> witnesses;
  ClauseResult c1, c2, c3;
  bool pass = false;
  Certificate cert = Certificate::Certified;

  // Maximal piece words, for cross-checking search variants.
  std::set<std::string> piece_set(const OrderedAlphabet& a) const;
};

// Classical pieces: longest common prefixes of distinct words in the
// symmetrized set. PASS iff every piece is strictly shorter than mu * length
// of each word it occurs in. Rejects non-symmetrized input.
PieceReport check_classical(const OrderedAlphabet& a, const std::vector<Word>& sym, double mu);

struct QuasiGeodesicReport {
  bool pass = false;
  // Worst subword [start, start+len) by margin d - (len/lambda - c).
  int worst_start = 0;
  int worst_len = 0;
  double worst_margin = 0;
};

// Checks d(endpoints) > len/lambda - c for every nonempty subword of w, with
// the path traced from the identity of the ball.
QuasiGeodesicReport quasigeodesic_check(const Ball& b, const Word& w, double lambda, double c);

// Exhaustive eps-piece search: prefixes U of words in the symmetrized set,
// subwords U' of other words, connectors Y,Z of length <= eps with
// U' = Y U Z in the group and Y R Y^{-1} != R'. include_c_prime adds the
// same-relator clause with U^{+-1}. mu only fills the C3 verdict.
PieceReport find_epsilon_pieces(const OraclePtr& o, const std::vector<Word>& sym, int eps,
                                double mu, bool include_c_prime = false);

// Full generalized condition: C1 (quasi-)geodesicity of each relator in the
// ambient ball, C2 length >= rho, C3 every eps-piece < mu * length.
// The geodesic variant (lambda=1, c=0) checks relator words are geodesic.
PieceReport check_generalized(const OraclePtr& o, const std::vector<Word>& sym,
                              const ScParams& p, const Ball& ambient_ball,
                              bool c_prime = false);

// Not-a-proper-power transfer guard: ||U|| < (mu rho - c)/lambda - eps and
// 1 - 122 lambda mu > 0.
struct PowerGuardReport {
  double length_bound = 0;
  double side_condition = 0;  // 1 - 122 lambda mu
  bool pass = false;
};
PowerGuardReport proper_power_guard(const Word& u, const ScParams& p);

// Finite-scale consistency check of the quotient hyperbolicity bound
// f(t) <= 4L, L = max relator length of the added set.
struct QuotientDeltaReport {
  int L = 0;
  double bound = 0;  // 4L
  double max_f = 0;
  bool skipped = false;  // empty added set
  bool pass = false;
  HyperbolicityProfile profile;
  Certificate cert = Certificate::Certified;
};
QuotientDeltaReport quotient_delta_check(const std::vector<Word>& added, const Ball& quotient_ball,
                                         int t_max,
                                         ProfileMode mode = ProfileMode::IntervalLower);

}  // namespace ggt
