#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggt/ball.hpp"
#include "ggt/hyperbolicity.hpp"
#include "ggt/presentation.hpp"
#include "ggt/smallcancel.hpp"
#include "ggt/wordsystems.hpp"

namespace ggt {

enum class ProbeVerdict { MemberPlus, MemberMinus, NotWithinBound };
const char* to_string(ProbeVerdict v);

// Bounded probe of x's membership in the elementary closure E(g):
// x g^n x^-1 =_G g^{+-n} for some n <= n_max. NotWithinBound never claims
// non-membership.
struct ElementaryProbeReport {
  Word g, x;
  int n_max = 0;
  ProbeVerdict verdict = ProbeVerdict::NotWithinBound;
  int witness_n = 0;
  bool x_torsion = false;  // order of x found within the bound
  int x_order = 0;
  Certificate cert = Certificate::Certified;
};

ElementaryProbeReport probe_elementary(const OraclePtr& o, const Word& g, const Word& x,
                                       int n_max);

// Bounded search for g^k = a h^l a^-1 with 1 <= |k|,|l| <= exp_bound and
// conjugators a of length <= conj_len.
struct CommensurabilityReport {
  Word g, h;
  bool found = false;
  long long k = 0, l = 0;
  Word conjugator;
  Certificate cert = Certificate::Certified;
};

CommensurabilityReport probe_commensurable(const OraclePtr& o, const Word& g, const Word& h,
                                           int exp_bound, int conj_len);

// Rank-one abelian target: increasing union of cyclics glued by multipliers.
struct RankOneSpec {
  std::vector<long long> multipliers;  // each >= 2
  std::vector<int> torsion_cosets;     // optional, non-decreasing when present

  void validate() const;
};

enum class StepKind { Base, Amalgam, ScQuotient, OsinQuotient };
const char* to_string(StepKind k);

struct ChainStep {
  StepKind kind = StepKind::Base;
  Presentation pres;
  std::vector<Word> added_relators;  // over pres.alphabet
  std::string new_generators;        // display letters introduced this step
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> assumptions;
  Certificate cert = Certificate::BestEffort;
  // Build-time audits (steps after the base).
  std::optional<InjectivityRadius> audit_inj;
  std::optional<int> audit_max_piece;
  std::optional<bool> audit_piece_pass;
};

struct ChainPlan {
  std::vector<ChainStep> steps;
  std::vector<std::pair<std::string, std::string>> ledger;
};

struct RipsParams {
  long long m_seed = 3;
  double mu = 1.0 / 6;   // classical piece audit ratio
  Word u, v;             // word-system U, V over H's generators; defaults to
                         // the first two generator letters when empty
  int osin_word_length = 8;
  unsigned long long seed = 1;
  std::optional<std::string> w_file;  // one word per line; overrides seeding
  int audit_ball_radius = 2;
  int audit_closure_radius = 4;
  long long work_cap = 50'000'000;
};

// Rips-type plan: H * F(Q-generators), an Osin quotient killing t w_t for
// the conjugation set T, then one small-cancellation quotient per Q-relator
// with z_i = r_i. `steps` counts emitted steps including the base.
ChainPlan build_rips_chain(const Presentation& q, const Presentation& h, int steps,
                           const RipsParams& params);

struct MonsterParams {
  int n_max = 6;         // elementary probe exponent bound
  int pair_budget = 64;  // enumerated pairs scanned per stage
  int exp_bound = 3;     // commensurability exponents
  int conj_len = 1;      // commensurability conjugator length
  long long m_seed = 2;
  double mu = 1.0 / 6;
  int closure_radius = 4;  // oracle radius when Dehn certification fails
  long long work_cap = 50'000'000;
};

// Monster-type plan: per stage, pick the first enumerated pair (u_j, v_j)
// with j >= stage and v_j outside the probed E(u_j); amalgam steps adjoin
// roots g^k with relators u_k (g^k)^{-m}; a small-cancellation step adds the
// word-system blocks over Y_i (new roots) and Z_i (generators outside
// E(u_{j_i})).
ChainPlan build_monster_chain(const Presentation& g0, const std::vector<RankOneSpec>& family,
                              int steps, const MonsterParams& params);

struct AuditParams {
  int ball_radius = 2;     // injectivity-radius domain ball
  int closure_radius = 6;  // oracle radius per step
  int t_max = 3;           // hyperbolicity profile scale
  long long work_cap = 50'000'000;
};

struct StepAudit {
  int step = 0;
  bool has_inj = false;
  InjectivityRadius inj;
  bool has_profile = false;
  HyperbolicityProfile profile;
  double f_tmax = 0;
  double ratio = 0;  // f(t_max) / injectivity lower bound
  std::string gap;   // reason when a part is missing
};

struct ChainAudit {
  std::vector<StepAudit> steps;
};

// Per-step injectivity radius of the step map and hyperbolicity profile of
// the step's ball; the ratio column is the finite-scale proxy for the
// delta_i = o(r_i) chain requirement. Evidence only.
ChainAudit audit_chain(const ChainPlan& plan, const AuditParams& ap);

// Plan directory: step_k.pres files plus ledger.txt key: value records.
void save_plan(const ChainPlan& plan, const std::string& dir);

std::string format_audit_csv(const ChainAudit& audit);

}  // namespace ggt
