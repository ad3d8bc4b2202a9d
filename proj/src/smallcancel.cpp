#include "ggt/smallcancel.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ggt/errors.hpp"

namespace ggt {

void ScParams::validate() const {
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  if (c < 0) throw std::invalid_argument("c must be >= 0");
  if (eps < 0) throw std::invalid_argument("eps must be >= 0");
  if (mu <= 0 || mu >= 1) throw std::invalid_argument("mu must lie in (0,1)");
  if (rho <= 0) throw std::invalid_argument("rho must be > 0");
}

std::set<std::string> PieceReport::piece_set(const OrderedAlphabet& a) const {
  std::set<std::string> out;
  for (const EpsPieceWitness& w : witnesses) out.insert(word_to_string(a, w.u));
  return out;
}

namespace {

void require_symmetrized(const OrderedAlphabet& a, const std::vector<Word>& sym) {
  if (sym.empty()) throw std::invalid_argument("empty relator set");
  std::vector<Word> sorted = sym;
  std::sort(sorted.begin(), sorted.end(),
            [&](const Word& u, const Word& v) { return shortlex_less(a, u, v); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != sym.size() || symmetrize(a, sym) != sorted) {
    throw std::invalid_argument("relator set is not symmetrized");
  }
}

int lcp_length(const Word& u, const Word& v) {
  std::size_t n = std::min(u.size(), v.size());
  std::size_t i = 0;
  while (i < n && u[i] == v[i]) ++i;
  return static_cast<int>(i);
}

void fill_c3(PieceReport& rep) {
  rep.c3.evaluated = true;
  rep.c3.pass = true;
  std::ostringstream detail;
  for (std::size_t i = 0; i < rep.relators.size(); ++i) {
    double limit = rep.mu * static_cast<double>(rep.relators[i].size());
    if (!(rep.max_piece_per_word[i] < limit)) {
      rep.c3.pass = false;
      if (detail.tellp() == 0) {
        detail << "piece " << rep.max_piece_per_word[i] << " !< " << limit << " at relator " << i;
      }
    }
  }
  if (rep.c3.pass) detail << "max piece " << rep.max_piece;
  rep.c3.detail = detail.str();
}

std::vector<Word> connector_words(const OrderedAlphabet& a, int eps) {
  std::vector<Word> out{Word{}};
  std::size_t prev_begin = 0;
  for (int len = 1; len <= eps; ++len) {
    std::size_t prev_end = out.size();
    for (std::size_t i = prev_begin; i < prev_end; ++i) {
      for (int r = 0; r < 2 * a.size(); ++r) {
        Letter l = a.letter_at_rank(r);
        if (!out[i].empty() && out[i].back() == letter_inverse(l)) continue;
        out.push_back(concat(out[i], Word{l}));
      }
    }
    prev_begin = prev_end;
  }
  return out;
}

}  // namespace

PieceReport check_classical(const OrderedAlphabet& a, const std::vector<Word>& sym, double mu) {
  require_symmetrized(a, sym);
  PieceReport rep;
  rep.relators = sym;
  rep.mu = mu;
  rep.max_piece_per_word.assign(sym.size(), 0);
  for (std::size_t i = 0; i < sym.size(); ++i) {
    for (std::size_t j = 0; j < sym.size(); ++j) {
      if (i == j) continue;
      int l = lcp_length(sym[i], sym[j]);
      if (l == 0) continue;
      rep.max_piece_per_word[i] = std::max(rep.max_piece_per_word[i], l);
      rep.max_piece = std::max(rep.max_piece, l);
      EpsPieceWitness w;
      w.relator_a = static_cast<int>(i);
      w.relator_b = static_cast<int>(j);
      w.u.assign(sym[i].begin(), sym[i].begin() + l);
      w.u_prime = w.u;
      rep.witnesses.push_back(std::move(w));
    }
  }
  fill_c3(rep);
  rep.pass = rep.c3.pass;
  return rep;
}

QuasiGeodesicReport quasigeodesic_check(const Ball& b, const Word& w, double lambda, double c) {
  if (!is_reduced(w)) throw std::invalid_argument("word must be reduced");
  std::vector<std::int32_t> vertex(w.size() + 1);
  vertex[0] = 0;
  for (std::size_t t = 0; t < w.size(); ++t) {
    std::int32_t next =
        b.neighbor(vertex[t], b.oracle().alphabet().letter_rank(w[t]));
    if (next < 0) throw GuardViolation("quasigeodesic check: path leaves the ball");
    vertex[t + 1] = next;
  }
  QuasiGeodesicReport rep;
  rep.pass = true;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      double len = static_cast<double>(j - i);
      double d = b.distance(vertex[i], vertex[j]);
      double margin = d - (len / lambda - c);
      if (margin < rep.worst_margin) {
        rep.worst_margin = margin;
        rep.worst_start = static_cast<int>(i);
        rep.worst_len = static_cast<int>(j - i);
      }
      // Non-strict at the boundary so geodesics are (1,0)-quasi-geodesic.
      if (margin < 0) rep.pass = false;
    }
  }
  return rep;
}

PieceReport find_epsilon_pieces(const OraclePtr& o, const std::vector<Word>& sym, int eps,
                                double mu, bool include_c_prime) {
  const OrderedAlphabet& a = o->alphabet();
  require_symmetrized(a, sym);
  if (eps < 0) throw std::invalid_argument("eps must be >= 0");
  PieceReport rep;
  rep.relators = sym;
  rep.mu = mu;
  rep.eps = eps;
  rep.max_piece_per_word.assign(sym.size(), 0);
  if (o->certificate() == Certificate::BestEffort) rep.cert = Certificate::BestEffort;
  std::vector<Word> conns = connector_words(a, eps);

  // U' = Y U Z in the group?
  auto matches = [&](const Word& u, const Word& uprime, const Word& y, const Word& z) {
    Verdict v = o->is_trivial(mul(mul(mul(y, u), z), inverse(uprime)));
    if (v == Verdict::Unknown) rep.cert = Certificate::BestEffort;
    return v == Verdict::Trivial;
  };
  // Clause: Y R Y^-1 != R' in the group (Unknown counts as distinct,
  // recorded by the certificate downgrade).
  auto conjugate_distinct = [&](const Word& y, const Word& ra, const Word& rb) {
    Verdict v = o->is_trivial(mul(conjugate(y, ra), inverse(rb)));
    if (v == Verdict::Unknown) rep.cert = Certificate::BestEffort;
    return v != Verdict::Trivial;
  };

  // Since the set is symmetrized, every subword of a relator occurs as a
  // prefix of some set element, so prefixes of ordered pairs suffice.
  for (std::size_t ia = 0; ia < sym.size(); ++ia) {
    const Word& ra = sym[ia];
    for (std::size_t ib = 0; ib < sym.size(); ++ib) {
      if (ia == ib) continue;
      const Word& rb = sym[ib];
      bool found = false;
      for (int lu = static_cast<int>(ra.size()); lu >= 1 && !found; --lu) {
        Word u(ra.begin(), ra.begin() + lu);
        for (int lp = 1; lp <= static_cast<int>(rb.size()) && !found; ++lp) {
          Word uprime(rb.begin(), rb.begin() + lp);
          for (const Word& y : conns) {
            if (found) break;
            for (const Word& z : conns) {
              if (!matches(u, uprime, y, z)) continue;
              if (!conjugate_distinct(y, ra, rb)) continue;
              EpsPieceWitness w;
              w.relator_a = static_cast<int>(ia);
              w.relator_b = static_cast<int>(ib);
              w.u = u;
              w.u_prime = uprime;
              w.y = y;
              w.z = z;
              rep.witnesses.push_back(std::move(w));
              rep.max_piece_per_word[ia] = std::max(rep.max_piece_per_word[ia], lu);
              rep.max_piece = std::max(rep.max_piece, lu);
              found = true;
              break;
            }
          }
        }
      }
    }
  }

  if (include_c_prime) {
    // Same-relator clause: disjoint occurrences of U and U^{+-1} in one word.
    for (std::size_t i = 0; i < sym.size(); ++i) {
      const Word& r = sym[i];
      bool found = false;
      for (int lu = static_cast<int>(r.size()) - 1; lu >= 1 && !found; --lu) {
        Word u(r.begin(), r.begin() + lu);
        Word uinv = inverse(u);
        for (int p = lu; p < static_cast<int>(r.size()) && !found; ++p) {
          for (int l2 = 1; l2 <= static_cast<int>(r.size()) - p && !found; ++l2) {
            Word uprime(r.begin() + p, r.begin() + p + l2);
            for (int sign = 0; sign < 2 && !found; ++sign) {
              const Word& base = sign == 0 ? u : uinv;
              for (const Word& y : conns) {
                if (found) break;
                for (const Word& z : conns) {
                  if (!matches(base, uprime, y, z)) continue;
                  EpsPieceWitness w;
                  w.relator_a = static_cast<int>(i);
                  w.relator_b = static_cast<int>(i);
                  w.u = u;
                  w.u_prime = uprime;
                  w.y = y;
                  w.z = z;
                  w.inverted = sign == 1;
                  w.same_relator = true;
                  rep.witnesses.push_back(std::move(w));
                  rep.max_piece_per_word[i] = std::max(rep.max_piece_per_word[i], lu);
                  rep.max_piece = std::max(rep.max_piece, lu);
                  found = true;
                  break;
                }
              }
            }
          }
        }
      }
    }
  }

  fill_c3(rep);
  rep.pass = rep.c3.pass;
  return rep;
}

PieceReport check_generalized(const OraclePtr& o, const std::vector<Word>& sym,
                              const ScParams& p, const Ball& ambient_ball, bool c_prime) {
  p.validate();
  PieceReport rep = find_epsilon_pieces(o, sym, p.eps, p.mu, c_prime);

  rep.c1.evaluated = true;
  rep.c1.pass = true;
  const bool geodesic_variant = p.lambda == 1 && p.c == 0;
  std::ostringstream c1d;
  for (std::size_t i = 0; i < sym.size(); ++i) {
    bool ok;
    if (geodesic_variant) {
      std::int32_t id = ambient_ball.locate(sym[i]);
      if (id < 0) throw GuardViolation("relator walk leaves the ambient ball");
      ok = ambient_ball.depth(id) == static_cast<int>(sym[i].size());
    } else {
      ok = quasigeodesic_check(ambient_ball, sym[i], p.lambda, p.c).pass;
    }
    if (!ok) {
      rep.c1.pass = false;
      if (c1d.tellp() == 0) c1d << "relator " << i << " fails the "
                                << (geodesic_variant ? "geodesic" : "quasi-geodesic") << " clause";
    }
  }
  if (rep.c1.pass) c1d << (geodesic_variant ? "all relators geodesic" : "all relators quasi-geodesic");
  rep.c1.detail = c1d.str();

  rep.c2.evaluated = true;
  rep.c2.pass = true;
  std::ostringstream c2d;
  for (std::size_t i = 0; i < sym.size(); ++i) {
    if (static_cast<double>(sym[i].size()) < p.rho) {
      rep.c2.pass = false;
      if (c2d.tellp() == 0) c2d << "relator " << i << " length " << sym[i].size() << " < rho";
    }
  }
  if (rep.c2.pass) c2d << "all lengths >= rho";
  rep.c2.detail = c2d.str();

  if (ambient_ball.certificate() == Certificate::BestEffort) rep.cert = Certificate::BestEffort;
  rep.pass = rep.c1.pass && rep.c2.pass && rep.c3.pass;
  return rep;
}

PowerGuardReport proper_power_guard(const Word& u, const ScParams& p) {
  PowerGuardReport rep;
  rep.length_bound = (p.mu * p.rho - p.c) / p.lambda - p.eps;
  rep.side_condition = 1.0 - 122.0 * p.lambda * p.mu;
  rep.pass = static_cast<double>(u.size()) < rep.length_bound && rep.side_condition > 0;
  return rep;
}

QuotientDeltaReport quotient_delta_check(const std::vector<Word>& added, const Ball& quotient_ball,
                                         int t_max, ProfileMode mode) {
  QuotientDeltaReport rep;
  rep.profile = hyperbolicity_function(quotient_ball, t_max, mode);
  rep.cert = rep.profile.cert;
  if (added.empty()) {
    rep.skipped = true;
    rep.pass = true;
    return rep;
  }
  for (const Word& w : added) rep.L = std::max(rep.L, static_cast<int>(w.size()));
  rep.bound = 4.0 * rep.L;
  rep.max_f = rep.profile.samples.empty() ? 0 : rep.profile.samples.back().f;
  rep.pass = rep.max_f <= rep.bound + 1e-12;
  return rep;
}

}  // namespace ggt
