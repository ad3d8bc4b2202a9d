#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggt/smallcancel.hpp"
#include "ggt/word.hpp"

namespace ggt {

// Exponent rows m_{i,1} = 2^{i-1} m_seed, j_i = m_{i,1} - 1,
// m_{i,t} = m_{i,1} + (t-1); row i occupies [2^{i-1} m, 2^i m - 2], so rows
// are pairwise disjoint.
struct ExponentSchedule {
  long long m_seed = 0;
  int k = 0;
  std::vector<std::vector<long long>> rows;  // rows[i-1] = (m_{i,1} .. m_{i,j_i})

  long long m_min() const { return m_seed; }
  long long m_max(int i) const { return rows[static_cast<std::size_t>(i - 1)].back(); }
  int j(int i) const { return static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()); }
};

ExponentSchedule build_schedule(long long m_seed, int k);

// R_i = z_i U^{m_{i,1}} V U^{m_{i,2}} V ... V U^{m_{i,j_i}}
struct WordSystem {
  std::vector<Word> z;
  Word u, v;
  ExponentSchedule schedule;
  int L = 0;  // max(||U||, ||V||, ||z_i||)
  std::vector<Word> relators;
  // Set when free reduction shortened an assembled relator (the template
  // assumes no cancellation at junctions).
  bool junction_cancellation = false;
};

WordSystem build_word_system(const std::vector<Word>& z, const Word& u, const Word& v,
                             const ExponentSchedule& schedule);

enum class ClauseStatus { Pass, Fail, Indeterminate };
const char* to_string(ClauseStatus s);

struct ConditionClause {
  std::string name;
  double lhs = 0, rhs = 0;
  ClauseStatus status = ClauseStatus::Indeterminate;
  std::string detail;
};

struct ConditionsReport {
  std::optional<double> eps_prime;
  std::vector<ConditionClause> clauses;
  bool any_fail = false;
  bool any_indeterminate = false;
  bool pass = false;  // every clause evaluated and passing
};

// The four system inequalities: ||R_i|| >= rho; m_min >= K~;
// mu rho >= 6 L (m_max_i + 1); m_min >= (2 eps' / ||U||) * 12 lambda with
// eps' = eps + 2|c| + 5 (2 R_stab + 182 delta + |c|/2). Clauses whose
// constants (K~, R_stab, delta) are absent come back INDETERMINATE.
ConditionsReport validate_conditions(const WordSystem& ws, const ScParams& p);

double eps_prime(double eps, double c, double r_stability, double delta);

// C'(lambda,c,eps,mu,rho)-style piece audit of the symmetrized system.
PieceReport system_piece_audit(const WordSystem& ws, const OraclePtr& o, int eps, double mu);

}  // namespace ggt
