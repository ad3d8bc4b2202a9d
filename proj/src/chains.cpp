#include "ggt/chains.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ggt/coset_graph.hpp"
#include "ggt/errors.hpp"

namespace ggt {

const char* to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::MemberPlus: return "MEMBER(+)";
    case ProbeVerdict::MemberMinus: return "MEMBER(-)";
    case ProbeVerdict::NotWithinBound: return "NOT_WITHIN_BOUND";
  }
  return "?";
}

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::Base: return "BASE";
    case StepKind::Amalgam: return "AMALGAM";
    case StepKind::ScQuotient: return "SC_QUOTIENT";
    case StepKind::OsinQuotient: return "OSIN_QUOTIENT";
  }
  return "?";
}

ElementaryProbeReport probe_elementary(const OraclePtr& o, const Word& g, const Word& x,
                                       int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (!o->alphabet().contains_word(g) || !o->alphabet().contains_word(x)) {
    throw std::invalid_argument("probe words use letters outside the oracle alphabet");
  }
  ElementaryProbeReport rep;
  rep.g = g;
  rep.x = x;
  rep.n_max = n_max;
  if (o->certificate() == Certificate::BestEffort) rep.cert = Certificate::BestEffort;

  for (int j = 1; j <= n_max; ++j) {
    Verdict v = o->is_trivial(power(x, j));
    if (v == Verdict::Trivial) {
      rep.x_torsion = true;
      rep.x_order = j;
      break;
    }
    if (v == Verdict::Unknown) rep.cert = Certificate::BestEffort;
  }

  for (int n = 1; n <= n_max; ++n) {
    Word lhs = conjugate(x, power(g, n));
    Verdict plus = o->is_trivial(mul(lhs, power(g, -n)));
    if (plus == Verdict::Trivial) {
      rep.verdict = ProbeVerdict::MemberPlus;
      rep.witness_n = n;
      return rep;
    }
    if (plus == Verdict::Unknown) rep.cert = Certificate::BestEffort;
    Verdict minus = o->is_trivial(mul(lhs, power(g, n)));
    if (minus == Verdict::Trivial) {
      rep.verdict = ProbeVerdict::MemberMinus;
      rep.witness_n = n;
      return rep;
    }
    if (minus == Verdict::Unknown) rep.cert = Certificate::BestEffort;
  }
  rep.verdict = ProbeVerdict::NotWithinBound;
  return rep;
}

namespace {

std::vector<Word> words_up_to_length(const OrderedAlphabet& a, int max_len) {
  std::vector<Word> out{Word{}};
  if (max_len < 1) return out;
  long long count = 0, layer = 2LL * a.size();
  for (int l = 1; l <= max_len; ++l) {
    count += layer;
    layer *= 2LL * a.size() - 1;
  }
  std::vector<Word> nonempty = enumerate_reduced_words(a, count);
  out.insert(out.end(), nonempty.begin(), nonempty.end());
  return out;
}

}  // namespace

CommensurabilityReport probe_commensurable(const OraclePtr& o, const Word& g, const Word& h,
                                           int exp_bound, int conj_len) {
  if (exp_bound < 1) throw std::invalid_argument("exp_bound must be >= 1");
  CommensurabilityReport rep;
  rep.g = g;
  rep.h = h;
  if (o->certificate() == Certificate::BestEffort) rep.cert = Certificate::BestEffort;
  std::vector<Word> conjugators = words_up_to_length(o->alphabet(), conj_len);
  for (int ak = 1; ak <= exp_bound; ++ak) {
    for (int sk : {1, -1}) {
      Word gk = power(g, sk * ak);
      for (int al = 1; al <= exp_bound; ++al) {
        for (int sl : {1, -1}) {
          Word hl = power(h, sl * al);
          for (const Word& a : conjugators) {
            Verdict v = o->is_trivial(mul(gk, inverse(conjugate(a, hl))));
            if (v == Verdict::Trivial) {
              rep.found = true;
              rep.k = sk * ak;
              rep.l = sl * al;
              rep.conjugator = a;
              return rep;
            }
            if (v == Verdict::Unknown) rep.cert = Certificate::BestEffort;
          }
        }
      }
    }
  }
  return rep;
}

void RankOneSpec::validate() const {
  if (multipliers.empty()) throw std::invalid_argument("multiplier sequence must be non-empty");
  for (long long m : multipliers) {
    if (m < 2) throw std::invalid_argument("multipliers must be >= 2");
  }
  for (std::size_t i = 1; i < torsion_cosets.size(); ++i) {
    if (torsion_cosets[i] < torsion_cosets[i - 1]) {
      throw std::invalid_argument("torsion coset counts must be non-decreasing");
    }
  }
}

namespace {

OraclePtr step_oracle(const Presentation& p, int closure_radius, long long work_cap) {
  if (p.relators.empty()) return make_free_oracle(p.alphabet);
  OraclePtr dehn = make_dehn_oracle(p);
  if (dehn->certificate() == Certificate::Certified) return dehn;
  return make_ball_closure_oracle(p, closure_radius, work_cap);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Random reduced word over the first n_gens generators of `a`.
Word random_reduced_word(const OrderedAlphabet& a, int n_gens, int length, std::uint64_t& rng) {
  Word w;
  for (int i = 0; i < length; ++i) {
    while (true) {
      int r = static_cast<int>(splitmix64(rng) % static_cast<std::uint64_t>(2 * n_gens));
      Letter l = r < n_gens ? make_letter(r, false) : make_letter(r - n_gens, true);
      if (!w.empty() && w.back() == letter_inverse(l)) continue;
      w.push_back(l);
      break;
    }
  }
  (void)a;
  return w;
}

void record(ChainStep& step, const std::string& key, const std::string& value) {
  step.params.emplace_back(key, value);
}

// Injectivity-radius and classical-piece audit of `cur` against `prev`.
void run_step_audit(const ChainStep& prev, ChainStep& cur, double mu, int ball_radius,
                    int closure_radius, long long work_cap) {
  try {
    OraclePtr prev_o = step_oracle(prev.pres, closure_radius, work_cap);
    OraclePtr cur_o = step_oracle(cur.pres, closure_radius, work_cap);
    Ball dom = build_ball(prev_o, ball_radius, {.permissive = true});
    Homomorphism h;
    h.domain = prev.pres.alphabet;
    h.codomain = cur_o;
    for (int g = 0; g < prev.pres.alphabet.size(); ++g) {
      char d = prev.pres.alphabet.display_letter(g);
      int cg = -1;
      for (int g2 = 0; g2 < cur.pres.alphabet.size(); ++g2) {
        if (cur.pres.alphabet.display_letter(g2) == d) cg = g2;
      }
      if (cg < 0) throw std::logic_error("step map drops a generator");
      h.images.push_back(Word{make_letter(cg, true)});
    }
    cur.audit_inj = injectivity_radius(h, dom);
    record(cur, "audit.inj_radius", std::to_string(cur.audit_inj->value));
    record(cur, "audit.inj_unbounded", cur.audit_inj->unbounded_up_to ? "yes" : "no");
  } catch (const std::exception& e) {
    record(cur, "audit.inj_gap", e.what());
  }
  try {
    std::vector<Word> cyc;
    for (const Word& w : cur.added_relators) {
      Word r = cyclic_reduce(w);
      if (!r.empty()) cyc.push_back(r);
    }
    if (!cyc.empty()) {
      std::vector<Word> sym = symmetrize(cur.pres.alphabet, cyc);
      PieceReport pr = check_classical(cur.pres.alphabet, sym, mu);
      cur.audit_max_piece = pr.max_piece;
      cur.audit_piece_pass = pr.pass;
      record(cur, "audit.max_piece", std::to_string(pr.max_piece));
      record(cur, "audit.piece_pass", pr.pass ? "yes" : "no");
    }
  } catch (const std::exception& e) {
    record(cur, "audit.piece_gap", e.what());
  }
}

}  // namespace

ChainPlan build_rips_chain(const Presentation& q, const Presentation& h, int steps,
                           const RipsParams& params) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  for (std::size_t i = 1; i < q.relators.size(); ++i) {
    if (q.relators[i].size() < q.relators[i - 1].size()) {
      throw std::invalid_argument("Q relators must be ordered by non-decreasing length");
    }
  }
  const int nh = h.alphabet.size(), nq = q.alphabet.size();
  if (nq < 1) throw std::invalid_argument("Q needs at least one generator");
  std::vector<char> display = h.alphabet.display();
  for (char qc : q.alphabet.display()) {
    if (std::find(display.begin(), display.end(), qc) != display.end()) {
      throw std::invalid_argument("Q and H generator letters must be disjoint");
    }
    display.push_back(qc);
  }
  OrderedAlphabet comb(display);
  auto lift_q = [&](const Word& w) {
    Word out;
    for (Letter l : w) out.push_back(make_letter(letter_gen(l) + nh, letter_positive(l)));
    return out;
  };

  ChainPlan plan;
  plan.ledger.emplace_back("chain", "rips");
  plan.ledger.emplace_back("m_seed", std::to_string(params.m_seed));
  plan.ledger.emplace_back("seed", std::to_string(params.seed));

  ChainStep base;
  base.kind = StepKind::Base;
  base.pres = Presentation{comb, h.relators};
  base.new_generators = std::string(q.alphabet.display().begin(), q.alphabet.display().end());
  base.cert = Certificate::Certified;
  record(base, "kind", to_string(base.kind));
  plan.steps.push_back(std::move(base));

  if (static_cast<int>(plan.steps.size()) < steps) {
    // Osin quotient: kill t w_t over the conjugation set T.
    ChainStep step;
    step.kind = StepKind::OsinQuotient;
    step.pres = plan.steps.back().pres;
    std::vector<Word> w_pool;
    if (params.w_file) {
      std::ifstream in(*params.w_file);
      if (!in) throw std::invalid_argument("cannot open w-word file " + *params.w_file);
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        w_pool.push_back(free_reduce(parse_word(comb, line)));
      }
      step.assumptions.push_back("osin words from file; suitability UNVERIFIED");
    } else {
      step.assumptions.push_back("osin words seeded pseudorandom; UNVERIFIED");
    }
    std::uint64_t rng = params.seed;
    std::size_t next_w = 0;
    for (int qg = 0; qg < nq; ++qg) {
      Letter gj = make_letter(nh + qg, true);
      for (int hg = 0; hg < nh; ++hg) {
        Word x{make_letter(hg, true)};
        for (const Word& t : {conjugate(Word{letter_inverse(gj)}, x), conjugate(Word{gj}, x)}) {
          Word w;
          if (!w_pool.empty()) {
            if (next_w >= w_pool.size()) throw std::invalid_argument("w-word file exhausted");
            w = w_pool[next_w++];
          } else {
            w = random_reduced_word(comb, nh, params.osin_word_length, rng);
          }
          Word relator = cyclic_reduce(mul(t, w));
          if (relator.empty()) throw std::invalid_argument("degenerate osin relator t w = 1");
          step.added_relators.push_back(relator);
        }
      }
    }
    for (const Word& r : step.added_relators) step.pres.relators.push_back(r);
    record(step, "kind", to_string(step.kind));
    record(step, "T_size", std::to_string(step.added_relators.size()));
    plan.steps.push_back(std::move(step));
  }

  if (q.relators.empty()) {
    plan.ledger.emplace_back("note",
                             "Q has no relators: no SC stages; plan is the H-quotient-by-Z skeleton");
  } else if (static_cast<int>(plan.steps.size()) < steps) {
    Word u = params.u, v = params.v;
    if (u.empty() || v.empty()) {
      if (nh < 2) throw std::invalid_argument("default U, V need at least two H generators");
      if (u.empty()) u = Word{make_letter(0, true)};
      if (v.empty()) v = Word{make_letter(1, true)};
    }
    ExponentSchedule sched = build_schedule(params.m_seed, static_cast<int>(q.relators.size()));
    std::vector<Word> z;
    for (const Word& r : q.relators) z.push_back(lift_q(r));
    WordSystem ws = build_word_system(z, u, v, sched);
    plan.ledger.emplace_back("wordsystem.U", word_to_string(comb, u));
    plan.ledger.emplace_back("wordsystem.V", word_to_string(comb, v));
    if (ws.junction_cancellation) {
      plan.ledger.emplace_back("warning", "junction cancellation in word-system relators");
    }
    for (std::size_t i = 0; i < ws.relators.size() && static_cast<int>(plan.steps.size()) < steps;
         ++i) {
      ChainStep step;
      step.kind = StepKind::ScQuotient;
      step.pres = plan.steps.back().pres;
      Word relator = cyclic_reduce(ws.relators[i]);
      step.added_relators.push_back(relator);
      step.pres.relators.push_back(relator);
      record(step, "kind", to_string(step.kind));
      record(step, "z_index", std::to_string(i + 1));
      record(step, "z", word_to_string(comb, z[i]));
      plan.steps.push_back(std::move(step));
    }
  }

  for (std::size_t i = 1; i < plan.steps.size(); ++i) {
    run_step_audit(plan.steps[i - 1], plan.steps[i], params.mu, params.audit_ball_radius,
                   params.audit_closure_radius, params.work_cap);
  }
  return plan;
}

ChainPlan build_monster_chain(const Presentation& g0, const std::vector<RankOneSpec>& family,
                              int steps, const MonsterParams& params) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (family.empty()) throw std::invalid_argument("family must be non-empty");
  for (const RankOneSpec& spec : family) spec.validate();
  const int n0 = g0.alphabet.size();
  if (n0 < 2) throw std::invalid_argument("G0 needs at least two generators");

  ChainPlan plan;
  plan.ledger.emplace_back("chain", "monster");
  plan.ledger.emplace_back(
      "multiplier_reading",
      "family k's multiplier sequence, indexed by stage (clamped to its last entry)");
  plan.ledger.emplace_back("assumption", "G0 torsion-free: taken on trust, not certified");

  ChainStep base;
  base.kind = StepKind::Base;
  base.pres = g0;
  base.cert = Certificate::Certified;
  record(base, "kind", to_string(base.kind));
  plan.steps.push_back(std::move(base));

  // Diagonal pairs (u,u) can never satisfy v outside E(u); skip them so the
  // enumeration matches the selection rule.
  std::vector<std::pair<Word, Word>> pairs;
  for (const auto& pr : enumerate_pairs(g0.alphabet, 4LL * params.pair_budget)) {
    if (pr.first == pr.second) continue;
    pairs.push_back(pr);
    if (static_cast<int>(pairs.size()) >= params.pair_budget) break;
  }

  std::set<char> used(g0.alphabet.display().begin(), g0.alphabet.display().end());
  auto fresh_letter = [&]() {
    for (char c = 'a'; c <= 'z'; ++c) {
      if (!used.count(c)) {
        used.insert(c);
        return c;
      }
    }
    throw std::invalid_argument("out of generator letters");
  };

  for (int stage = 1; stage <= steps; ++stage) {
    const Presentation& cur = plan.steps.back().pres;
    OraclePtr oracle = step_oracle(cur, params.closure_radius, params.work_cap);

    // j_i = smallest j >= i with v_j outside the probed E(u_j).
    int ji = -1;
    ElementaryProbeReport ji_probe;
    for (int j = stage; j <= static_cast<int>(pairs.size()); ++j) {
      ElementaryProbeReport probe = probe_elementary(
          oracle, pairs[static_cast<std::size_t>(j - 1)].first,
          pairs[static_cast<std::size_t>(j - 1)].second, params.n_max);
      if (probe.verdict == ProbeVerdict::NotWithinBound) {
        ji = j;
        ji_probe = probe;
        break;
      }
    }
    if (ji < 0) {
      throw std::runtime_error("stage " + std::to_string(stage) +
                               ": no admissible pair within the probe budget");
    }
    const Word& uji = pairs[static_cast<std::size_t>(ji - 1)].first;
    const Word& vji = pairs[static_cast<std::size_t>(ji - 1)].second;

    // Amalgam steps: adjoin a root g^k with u_k (g^k)^{-m}.
    std::vector<Letter> new_roots;
    for (int k = 1; k <= ji; ++k) {
      const RankOneSpec& spec = family[std::min<std::size_t>(k - 1, family.size() - 1)];
      long long m = spec.multipliers[std::min<std::size_t>(stage - 1, spec.multipliers.size() - 1)];
      char letter = fresh_letter();
      ChainStep step;
      step.kind = StepKind::Amalgam;
      std::vector<char> display = plan.steps.back().pres.alphabet.display();
      display.push_back(letter);
      step.pres.alphabet = OrderedAlphabet(display);
      step.pres.relators = plan.steps.back().pres.relators;
      Letter root = make_letter(step.pres.alphabet.size() - 1, true);
      new_roots.push_back(root);
      Word relator = cyclic_reduce(
          mul(pairs[static_cast<std::size_t>(k - 1)].first, power(Word{root}, -m)));
      step.added_relators.push_back(relator);
      step.pres.relators.push_back(relator);
      step.new_generators = std::string(1, letter);
      record(step, "kind", to_string(step.kind));
      record(step, "stage", std::to_string(stage));
      record(step, "k", std::to_string(k));
      record(step, "multiplier", std::to_string(m));
      record(step, "u_k", word_to_string(step.pres.alphabet, pairs[static_cast<std::size_t>(k - 1)].first));
      step.assumptions.push_back("amalgam over E(u_k): maximal-elementary status ASSUMED");
      plan.steps.push_back(std::move(step));
    }

    // Small-cancellation stage: word systems over Y_i and Z_i.
    ChainStep sc;
    sc.kind = StepKind::ScQuotient;
    sc.pres = plan.steps.back().pres;
    const OrderedAlphabet& alpha = sc.pres.alphabet;
    record(sc, "kind", to_string(sc.kind));
    record(sc, "stage", std::to_string(stage));
    record(sc, "j_i", std::to_string(ji));
    record(sc, "u_ji", word_to_string(alpha, uji));
    record(sc, "v_ji", word_to_string(alpha, vji));
    sc.assumptions.push_back("v_ji outside E(u_ji): ASSUMED from bounded probe (n_max " +
                             std::to_string(params.n_max) + ")");

    // c_i, c_i' : first candidate pair not commensurable within bounds.
    std::vector<Word> cands = enumerate_reduced_words(g0.alphabet, 12);
    Word ci, cip;
    bool found_c = false;
    for (std::size_t a = 0; a < cands.size() && !found_c; ++a) {
      for (std::size_t b = a + 1; b < cands.size() && !found_c; ++b) {
        CommensurabilityReport cr =
            probe_commensurable(oracle, cands[a], cands[b], params.exp_bound, params.conj_len);
        if (!cr.found) {
          ci = cands[a];
          cip = cands[b];
          found_c = true;
        }
      }
    }
    if (!found_c) {
      throw std::runtime_error("stage " + std::to_string(stage) +
                               ": no non-commensurable pair within the probe budget");
    }
    record(sc, "c_i", word_to_string(alpha, ci));
    record(sc, "c_i_prime", word_to_string(alpha, cip));
    sc.assumptions.push_back("c_i, c_i' non-commensurable: ASSUMED from bounded probe");

    std::vector<Word> y_words;
    for (Letter root : new_roots) y_words.push_back(Word{root});
    WordSystem block1 =
        build_word_system(y_words, ci, cip, build_schedule(params.m_seed, static_cast<int>(y_words.size())));
    for (const Word& r : block1.relators) {
      Word relator = cyclic_reduce(r);
      sc.added_relators.push_back(relator);
      sc.pres.relators.push_back(relator);
    }
    record(sc, "block1_relators", std::to_string(block1.relators.size()));

    std::vector<Word> z_words;
    std::string z_display;
    for (int g = 0; g < n0; ++g) {
      Word x{make_letter(g, true)};
      ElementaryProbeReport probe = probe_elementary(oracle, uji, x, params.n_max);
      if (probe.verdict == ProbeVerdict::NotWithinBound) {
        z_words.push_back(x);
        z_display.push_back(g0.alphabet.display_letter(g));
      }
    }
    record(sc, "Z_i", z_display);
    if (z_words.empty()) {
      record(sc, "block2_relators", "0 (Z_i empty)");
    } else {
      WordSystem block2 = build_word_system(
          z_words, uji, vji, build_schedule(params.m_seed, static_cast<int>(z_words.size())));
      for (const Word& r : block2.relators) {
        Word relator = cyclic_reduce(r);
        sc.added_relators.push_back(relator);
        sc.pres.relators.push_back(relator);
      }
      record(sc, "block2_relators", std::to_string(block2.relators.size()));
      sc.assumptions.push_back("Z_i membership from bounded probes; ASSUMED outside E(u_ji)");
    }
    plan.steps.push_back(std::move(sc));
  }

  for (std::size_t i = 1; i < plan.steps.size(); ++i) {
    run_step_audit(plan.steps[i - 1], plan.steps[i], params.mu, 2, params.closure_radius,
                   params.work_cap);
  }
  return plan;
}

ChainAudit audit_chain(const ChainPlan& plan, const AuditParams& ap) {
  ChainAudit audit;
  for (std::size_t i = 1; i < plan.steps.size(); ++i) {
    StepAudit sa;
    sa.step = static_cast<int>(i);
    const ChainStep& prev = plan.steps[i - 1];
    const ChainStep& cur = plan.steps[i];
    OraclePtr cur_o;
    try {
      OraclePtr prev_o = step_oracle(prev.pres, ap.closure_radius, ap.work_cap);
      cur_o = step_oracle(cur.pres, ap.closure_radius, ap.work_cap);
      Ball dom = build_ball(prev_o, ap.ball_radius, {.permissive = true});
      Homomorphism h;
      h.domain = prev.pres.alphabet;
      h.codomain = cur_o;
      for (int g = 0; g < prev.pres.alphabet.size(); ++g) {
        char d = prev.pres.alphabet.display_letter(g);
        int cg = -1;
        for (int g2 = 0; g2 < cur.pres.alphabet.size(); ++g2) {
          if (cur.pres.alphabet.display_letter(g2) == d) cg = g2;
        }
        if (cg < 0) throw std::logic_error("step map drops a generator");
        h.images.push_back(Word{make_letter(cg, true)});
      }
      sa.inj = injectivity_radius(h, dom);
      sa.has_inj = true;
    } catch (const std::exception& e) {
      sa.gap = e.what();
    }
    try {
      if (!cur_o) cur_o = step_oracle(cur.pres, ap.closure_radius, ap.work_cap);
      Ball b = build_ball(cur_o, 2 * ap.t_max, {.permissive = true});
      sa.profile = hyperbolicity_function(b, ap.t_max, ProfileMode::IntervalLower);
      sa.has_profile = true;
      sa.f_tmax = sa.profile.samples.back().f;
      if (sa.has_inj) {
        sa.ratio = sa.f_tmax / std::max(1, sa.inj.value);
      }
    } catch (const std::exception& e) {
      if (!sa.gap.empty()) sa.gap += "; ";
      sa.gap += e.what();
    }
    audit.steps.push_back(std::move(sa));
  }
  return audit;
}

void save_plan(const ChainPlan& plan, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::ostringstream ledger;
  for (const auto& [k, v] : plan.ledger) ledger << k << ": " << v << "\n";
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const ChainStep& step = plan.steps[i];
    save_presentation(step.pres,
                      (std::filesystem::path(dir) / ("step_" + std::to_string(i) + ".pres")).string());
    ledger << "step_" << i << ".kind: " << to_string(step.kind) << "\n";
    if (!step.new_generators.empty()) {
      ledger << "step_" << i << ".new_generators: " << step.new_generators << "\n";
    }
    for (const auto& [k, v] : step.params) {
      if (k == "kind") continue;
      ledger << "step_" << i << "." << k << ": " << v << "\n";
    }
    for (const std::string& a : step.assumptions) {
      ledger << "step_" << i << ".assumption: " << a << "\n";
    }
  }
  std::ofstream out(std::filesystem::path(dir) / "ledger.txt");
  out << ledger.str();
}

std::string format_audit_csv(const ChainAudit& audit) {
  std::ostringstream out;
  out << "step,inj_radius,inj_unbounded,f_tmax,ratio,cert,gap\n";
  for (const StepAudit& sa : audit.steps) {
    out << sa.step << ",";
    if (sa.has_inj) {
      out << sa.inj.value << "," << (sa.inj.unbounded_up_to ? "yes" : "no") << ",";
    } else {
      out << ",,";
    }
    if (sa.has_profile) {
      out << sa.f_tmax << "," << sa.ratio << "," << to_string(sa.profile.cert) << ",";
    } else {
      out << ",,,";
    }
    out << sa.gap << "\n";
  }
  return out.str();
}

}  // namespace ggt
