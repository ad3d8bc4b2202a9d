#include "ggt/wordsystems.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace ggt {

const char* to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::Pass: return "PASS";
    case ClauseStatus::Fail: return "FAIL";
    case ClauseStatus::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

ExponentSchedule build_schedule(long long m_seed, int k) {
  if (m_seed < 2) throw std::invalid_argument("m_seed must be >= 2");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > 40) throw std::invalid_argument("k too large for 2^(k-1) scaling");
  ExponentSchedule s;
  s.m_seed = m_seed;
  s.k = k;
  std::set<long long> seen;
  for (int i = 1; i <= k; ++i) {
    long long mi1 = (1LL << (i - 1)) * m_seed;
    long long ji = mi1 - 1;
    std::vector<long long> row;
    for (long long t = 0; t < ji; ++t) {
      long long m = mi1 + t;
      if (!seen.insert(m).second) throw std::logic_error("exponent distinctness violated");
      row.push_back(m);
    }
    s.rows.push_back(std::move(row));
  }
  return s;
}

WordSystem build_word_system(const std::vector<Word>& z, const Word& u, const Word& v,
                             const ExponentSchedule& schedule) {
  if (u.empty()) throw std::invalid_argument("U must be non-empty");
  if (v.empty()) throw std::invalid_argument("V must be non-empty");
  if (static_cast<int>(z.size()) != schedule.k) {
    throw std::invalid_argument("|Z| must equal the schedule's k");
  }
  for (const Word& zi : z) {
    if (zi.empty()) throw std::invalid_argument("z_i must be non-empty");
    if (!is_reduced(zi)) throw std::invalid_argument("z_i must be reduced");
  }
  if (!is_reduced(u) || !is_reduced(v)) throw std::invalid_argument("U, V must be reduced");

  WordSystem ws;
  ws.z = z;
  ws.u = u;
  ws.v = v;
  ws.schedule = schedule;
  ws.L = static_cast<int>(std::max(u.size(), v.size()));
  for (const Word& zi : z) ws.L = std::max(ws.L, static_cast<int>(zi.size()));

  for (int i = 1; i <= schedule.k; ++i) {
    Word raw = z[static_cast<std::size_t>(i - 1)];
    const auto& row = schedule.rows[static_cast<std::size_t>(i - 1)];
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (t > 0) raw = concat(raw, v);
      raw = concat(raw, power(u, row[t]));
    }
    Word reduced = free_reduce(raw);
    if (reduced.size() != raw.size()) ws.junction_cancellation = true;
    ws.relators.push_back(std::move(reduced));
  }
  return ws;
}

double eps_prime(double eps, double c, double r_stability, double delta) {
  double ac = std::abs(c);
  return eps + 2 * ac + 5 * (2 * r_stability + 182 * delta + ac / 2);
}

ConditionsReport validate_conditions(const WordSystem& ws, const ScParams& p) {
  p.validate();
  ConditionsReport rep;
  auto add = [&](ConditionClause cl) {
    if (cl.status == ClauseStatus::Fail) rep.any_fail = true;
    if (cl.status == ClauseStatus::Indeterminate) rep.any_indeterminate = true;
    rep.clauses.push_back(std::move(cl));
  };

  for (int i = 1; i <= ws.schedule.k; ++i) {
    ConditionClause cl;
    cl.name = "length(R_" + std::to_string(i) + ") >= rho";
    cl.lhs = static_cast<double>(ws.relators[static_cast<std::size_t>(i - 1)].size());
    cl.rhs = p.rho;
    cl.status = cl.lhs >= cl.rhs ? ClauseStatus::Pass : ClauseStatus::Fail;
    add(std::move(cl));
  }

  {
    ConditionClause cl;
    cl.name = "m_min >= K~";
    cl.lhs = static_cast<double>(ws.schedule.m_min());
    if (p.k_tilde) {
      cl.rhs = *p.k_tilde;
      cl.status = cl.lhs >= cl.rhs ? ClauseStatus::Pass : ClauseStatus::Fail;
    } else {
      cl.detail = "K~ not supplied";
    }
    add(std::move(cl));
  }

  for (int i = 1; i <= ws.schedule.k; ++i) {
    ConditionClause cl;
    cl.name = "mu rho >= 6 L (m_max_" + std::to_string(i) + " + 1)";
    cl.lhs = p.mu * p.rho;
    cl.rhs = 6.0 * ws.L * (static_cast<double>(ws.schedule.m_max(i)) + 1);
    cl.status = cl.lhs >= cl.rhs ? ClauseStatus::Pass : ClauseStatus::Fail;
    add(std::move(cl));
  }

  {
    ConditionClause cl;
    cl.name = "m_min >= (2 eps' / length(U)) * 12 lambda";
    cl.lhs = static_cast<double>(ws.schedule.m_min());
    if (p.r_stability && p.delta) {
      double ep = eps_prime(p.eps, p.c, *p.r_stability, *p.delta);
      rep.eps_prime = ep;
      cl.rhs = (2.0 * ep / static_cast<double>(ws.u.size())) * 12.0 * p.lambda;
      cl.status = cl.lhs >= cl.rhs ? ClauseStatus::Pass : ClauseStatus::Fail;
      std::ostringstream d;
      d << "eps' = " << ep;
      cl.detail = d.str();
    } else {
      cl.detail = "R_stability or delta not supplied";
    }
    add(std::move(cl));
  }

  rep.pass = !rep.any_fail && !rep.any_indeterminate;
  return rep;
}

PieceReport system_piece_audit(const WordSystem& ws, const OraclePtr& o, int eps, double mu) {
  std::vector<Word> sym = symmetrize(o->alphabet(), ws.relators);
  return find_epsilon_pieces(o, sym, eps, mu, /*include_c_prime=*/true);
}

}  // namespace ggt
