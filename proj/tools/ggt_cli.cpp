#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ggt/ball.hpp"
#include "ggt/chains.hpp"
#include "ggt/coset_graph.hpp"
#include "ggt/errors.hpp"
#include "ggt/hyperbolicity.hpp"
#include "ggt/oracle.hpp"
#include "ggt/presentation.hpp"
#include "ggt/smallcancel.hpp"
#include "ggt/wordsystems.hpp"

using namespace ggt;

namespace {

OraclePtr pick_oracle(const Presentation& p, const std::string& kind, int closure_radius,
                      long long work_cap) {
  if (kind == "free") return make_free_oracle(p.alphabet);
  if (kind == "abelian") return make_abelian_oracle(p);
  if (kind == "dehn") return make_dehn_oracle(p);
  if (kind == "ball") return make_ball_closure_oracle(p, closure_radius, work_cap);
  if (kind == "finite") return make_finite_table_oracle(p, closure_radius, work_cap);
  if (kind == "auto") {
    if (p.relators.empty()) return make_free_oracle(p.alphabet);
    OraclePtr dehn = make_dehn_oracle(p);
    if (dehn->certificate() == Certificate::Certified) return dehn;
    return make_ball_closure_oracle(p, closure_radius, work_cap);
  }
  throw CLI::ValidationError("--oracle", "unknown oracle kind '" + kind + "'");
}

OraclePtr product_oracle(const std::string& factor_paths, int closure_radius, long long work_cap) {
  std::vector<OraclePtr> factors;
  std::stringstream ss(factor_paths);
  std::string path;
  while (std::getline(ss, path, ',')) {
    Presentation p = load_presentation(path);
    if (p.relators.empty()) {
      factors.push_back(make_free_oracle(p.alphabet));
    } else {
      factors.push_back(make_finite_table_oracle(p, closure_radius, work_cap));
    }
  }
  return make_free_product_oracle(std::move(factors));
}

Ball make_metric_ball(OraclePtr o, int t_max) {
  Ball b = build_ball(o, t_max, {.permissive = true});
  if (!b.has_exact_metric() && !b.complete()) {
    b = build_ball(o, 2 * t_max, {.permissive = true});
  }
  return b;
}

ProfileMode parse_mode(const std::string& s) {
  if (s == "exact") return ProfileMode::Exact;
  if (s == "interval") return ProfileMode::IntervalLower;
  throw CLI::ValidationError("--mode", "expected exact|interval");
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
  return out;
}

void print_profile(const HyperbolicityProfile& p) {
  std::cout << "t,f,mode,triangles\n";
  for (const ProfileSample& s : p.samples) {
    std::cout << s.t << "," << s.f << "," << to_string(s.mode) << "," << s.triangles << "\n";
  }
}

void print_piece_report(const OrderedAlphabet& a, const PieceReport& rep) {
  std::cout << "max_piece: " << rep.max_piece << "\n";
  std::cout << "relators: " << rep.relators.size() << "\n";
  std::cout << "witnesses: " << rep.witnesses.size() << "\n";
  for (const std::string& piece : rep.piece_set(a)) std::cout << "piece: " << piece << "\n";
  if (rep.c1.evaluated) std::cout << "C1: " << (rep.c1.pass ? "PASS" : "FAIL") << " (" << rep.c1.detail << ")\n";
  if (rep.c2.evaluated) std::cout << "C2: " << (rep.c2.pass ? "PASS" : "FAIL") << " (" << rep.c2.detail << ")\n";
  if (rep.c3.evaluated) std::cout << "C3: " << (rep.c3.pass ? "PASS" : "FAIL") << " (" << rep.c3.detail << ")\n";
  std::cout << "pass: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  std::cout << "certificate: " << to_string(rep.cert) << "\n";
}

std::vector<Word> load_words(const OrderedAlphabet& a, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open word file " + path);
  std::vector<Word> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_word(a, line));
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"finite-scale geometric group theory toolkit"};
  app.require_subcommand(1);

  std::string pres_path, oracle_kind = "auto", factors;
  int closure_radius = 6;
  long long work_cap = 50'000'000;
  auto add_oracle_flags = [&](CLI::App* cmd, bool with_factors = false) {
    cmd->add_option("--pres", pres_path, "presentation file");
    cmd->add_option("--oracle", oracle_kind, "free|finite|freeprod|dehn|ball|abelian|auto");
    cmd->add_option("--closure-radius", closure_radius, "ball-closure radius");
    cmd->add_option("--work-cap", work_cap, "closure work cap");
    if (with_factors) cmd->add_option("--factors", factors, "comma-separated factor presentations");
  };
  auto get_oracle = [&]() -> OraclePtr {
    if (oracle_kind == "freeprod" || (!factors.empty() && pres_path.empty())) {
      if (factors.empty()) throw CLI::ValidationError("--factors", "freeprod oracle needs factors");
      return product_oracle(factors, closure_radius, work_cap);
    }
    if (pres_path.empty()) throw CLI::ValidationError("--pres", "presentation file required");
    return pick_oracle(load_presentation(pres_path), oracle_kind, closure_radius, work_cap);
  };

  // ball
  auto* ball_cmd = app.add_subcommand("ball", "emit a Cayley ball as CSV");
  int ball_radius = 3;
  add_oracle_flags(ball_cmd, true);
  ball_cmd->add_option("--radius", ball_radius, "ball radius");
  ball_cmd->callback([&]() {
    Ball b = build_ball(get_oracle(), ball_radius, {.permissive = true});
    std::cout << "element_id,representative_word,distance\n";
    for (int id = 0; id < b.size(); ++id) {
      std::cout << id << "," << word_to_string(b.oracle().alphabet(), b.rep(id)) << ","
                << b.depth(id) << "\n";
    }
  });

  // profile
  auto* profile_cmd = app.add_subcommand("profile", "hyperbolicity function profile");
  int t_max = 8, geodesic_cap = 100000;
  std::string mode_str = "interval";
  add_oracle_flags(profile_cmd, true);
  profile_cmd->add_option("--tmax", t_max, "largest perimeter");
  profile_cmd->add_option("--mode", mode_str, "exact|interval");
  profile_cmd->add_option("--cap", geodesic_cap, "geodesic enumeration cap");
  profile_cmd->callback([&]() {
    Ball b = make_metric_ball(get_oracle(), t_max);
    print_profile(hyperbolicity_function(b, t_max, parse_mode(mode_str), geodesic_cap));
  });

  // inj-radius
  auto* inj_cmd = app.add_subcommand("inj-radius", "injectivity radius of a homomorphism");
  std::string dom_path, cod_path, map_spec, dom_oracle = "auto", cod_oracle = "auto";
  int inj_radius_val = 4;
  inj_cmd->add_option("--dom", dom_path, "domain presentation")->required();
  inj_cmd->add_option("--cod", cod_path, "codomain presentation")->required();
  inj_cmd->add_option("--map", map_spec, "a->ab,b->B image spec")->required();
  inj_cmd->add_option("--radius", inj_radius_val, "domain ball radius");
  inj_cmd->add_option("--dom-oracle", dom_oracle, "domain oracle kind");
  inj_cmd->add_option("--cod-oracle", cod_oracle, "codomain oracle kind");
  inj_cmd->add_option("--closure-radius", closure_radius, "ball-closure radius");
  inj_cmd->callback([&]() {
    Presentation dom = load_presentation(dom_path);
    Presentation cod = load_presentation(cod_path);
    OraclePtr dom_o = pick_oracle(dom, dom_oracle, closure_radius, work_cap);
    OraclePtr cod_o = pick_oracle(cod, cod_oracle, closure_radius, work_cap);
    Ball dom_ball = build_ball(dom_o, inj_radius_val, {.permissive = true});
    Homomorphism h = parse_homomorphism(dom.alphabet, cod_o, map_spec);
    InjectivityRadius r = injectivity_radius(h, dom_ball);
    if (r.unbounded_up_to) {
      std::cout << "injectivity_radius: UNBOUNDED_UP_TO(" << r.value << ")\n";
    } else {
      std::cout << "injectivity_radius: " << r.value << "\n";
      std::cout << "witness_u: " << word_to_string(dom.alphabet, r.witness_u) << "\n";
      std::cout << "witness_v: " << word_to_string(dom.alphabet, r.witness_v) << "\n";
    }
    std::cout << "certificate: " << to_string(r.cert) << "\n";
  });

  // pieces
  auto* pieces_cmd = app.add_subcommand("pieces", "epsilon-piece search");
  int eps = 0;
  double mu = 1.0 / 6;
  bool cprime = false;
  add_oracle_flags(pieces_cmd);
  pieces_cmd->add_option("--eps", eps, "connector bound");
  pieces_cmd->add_option("--mu", mu, "piece ratio for the C3 verdict");
  pieces_cmd->add_flag("--cprime", cprime, "include the same-relator clause");
  pieces_cmd->callback([&]() {
    Presentation p = load_presentation(pres_path);
    OraclePtr o = pick_oracle(p, oracle_kind == "auto" ? "free" : oracle_kind, closure_radius,
                              work_cap);
    PieceReport rep = find_epsilon_pieces(o, p.symmetrized(), eps, mu, cprime);
    print_piece_report(p.alphabet, rep);
  });

  // check-sc
  auto* sc_cmd = app.add_subcommand("check-sc", "classical C'(mu) check");
  sc_cmd->add_option("--pres", pres_path, "presentation file")->required();
  sc_cmd->add_option("--mu", mu, "piece ratio");
  sc_cmd->callback([&]() {
    Presentation p = load_presentation(pres_path);
    print_piece_report(p.alphabet, check_classical(p.alphabet, p.symmetrized(), mu));
  });

  // check-gsc
  auto* gsc_cmd = app.add_subcommand("check-gsc", "generalized C(lambda,c,eps,mu,rho) check");
  ScParams scp;
  scp.mu = 1.0 / 6;
  scp.rho = 1;
  std::string system_path;
  int ambient_radius = 6;
  add_oracle_flags(gsc_cmd);
  gsc_cmd->add_option("--lambda", scp.lambda, "quasi-geodesic lambda");
  gsc_cmd->add_option("--c", scp.c, "quasi-geodesic c");
  gsc_cmd->add_option("--eps", scp.eps, "connector bound");
  gsc_cmd->add_option("--mu", scp.mu, "piece ratio");
  gsc_cmd->add_option("--rho", scp.rho, "minimum relator length");
  gsc_cmd->add_option("--system", system_path, "relator word file (default: --pres relators)");
  gsc_cmd->add_option("--radius", ambient_radius, "ambient ball radius");
  gsc_cmd->add_flag("--cprime", cprime, "C' variant");
  gsc_cmd->callback([&]() {
    Presentation p = load_presentation(pres_path);
    OraclePtr o = pick_oracle(p, oracle_kind, closure_radius, work_cap);
    std::vector<Word> rel = system_path.empty() ? p.relators : load_words(p.alphabet, system_path);
    std::vector<Word> sym = symmetrize(p.alphabet, rel);
    Ball b = build_ball(o, ambient_radius, {.permissive = true});
    print_piece_report(p.alphabet, check_generalized(o, sym, scp, b, cprime));
  });

  // gen-system
  auto* gen_cmd = app.add_subcommand("gen-system", "instantiate a word system");
  std::string gens = "a b c", z_spec = "c", u_spec = "a", v_spec = "b", out_path;
  long long m1 = 3;
  int k = 1;
  gen_cmd->add_option("--gens", gens, "generator letters, space separated");
  gen_cmd->add_option("--z", z_spec, "comma-separated z_i words");
  gen_cmd->add_option("--u", u_spec, "U word");
  gen_cmd->add_option("--v", v_spec, "V word");
  gen_cmd->add_option("--m1", m1, "schedule seed m_{1,1}");
  gen_cmd->add_option("--k", k, "number of relators");
  gen_cmd->add_option("--out", out_path, "relator output file");
  gen_cmd->callback([&]() {
    Presentation shell = make_presentation(gens, {});
    std::vector<Word> z;
    std::stringstream ss(z_spec);
    std::string part;
    while (std::getline(ss, part, ',')) z.push_back(parse_word(shell.alphabet, part));
    WordSystem ws = build_word_system(z, parse_word(shell.alphabet, u_spec),
                                      parse_word(shell.alphabet, v_spec), build_schedule(m1, k));
    std::ostringstream body;
    for (const Word& r : ws.relators) body << word_to_string(shell.alphabet, r) << "\n";
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      out << body.str();
    }
    std::cout << "relators: " << ws.relators.size() << "\n";
    std::cout << "L: " << ws.L << "\n";
    std::cout << "junction_cancellation: " << (ws.junction_cancellation ? "yes" : "no") << "\n";
    for (int i = 1; i <= ws.schedule.k; ++i) {
      std::cout << "length_R" << i << ": " << ws.relators[static_cast<std::size_t>(i - 1)].size()
                << "\n";
    }
    if (out_path.empty()) std::cout << body.str();
  });

  // validate-system
  auto* val_cmd = app.add_subcommand("validate-system", "check the system inequalities");
  std::string param_path;
  val_cmd->add_option("--gens", gens, "generator letters");
  val_cmd->add_option("--z", z_spec, "comma-separated z_i words");
  val_cmd->add_option("--u", u_spec, "U word");
  val_cmd->add_option("--v", v_spec, "V word");
  val_cmd->add_option("--m1", m1, "schedule seed");
  val_cmd->add_option("--k", k, "number of relators");
  val_cmd->add_option("--params", param_path, "key value file: lambda c eps mu rho delta Ktilde Rstab")
      ->required();
  val_cmd->callback([&]() {
    Presentation shell = make_presentation(gens, {});
    std::vector<Word> z;
    std::stringstream ss(z_spec);
    std::string part;
    while (std::getline(ss, part, ',')) z.push_back(parse_word(shell.alphabet, part));
    WordSystem ws = build_word_system(z, parse_word(shell.alphabet, u_spec),
                                      parse_word(shell.alphabet, v_spec), build_schedule(m1, k));
    ScParams p;
    p.mu = 1.0 / 6;
    p.rho = 1;
    std::ifstream in(param_path);
    if (!in) throw std::invalid_argument("cannot open parameter file " + param_path);
    std::string key;
    double value;
    while (in >> key >> value) {
      if (key == "lambda") p.lambda = value;
      else if (key == "c") p.c = value;
      else if (key == "eps") p.eps = static_cast<int>(value);
      else if (key == "mu") p.mu = value;
      else if (key == "rho") p.rho = value;
      else if (key == "delta") p.delta = value;
      else if (key == "Ktilde") p.k_tilde = value;
      else if (key == "Rstab") p.r_stability = value;
      else throw std::invalid_argument("unknown parameter key " + key);
    }
    ConditionsReport rep = validate_conditions(ws, p);
    if (rep.eps_prime) std::cout << "eps_prime: " << *rep.eps_prime << "\n";
    for (const ConditionClause& cl : rep.clauses) {
      std::cout << cl.name << ": " << to_string(cl.status) << " (lhs " << cl.lhs << ", rhs "
                << cl.rhs << (cl.detail.empty() ? "" : "; " + cl.detail) << ")\n";
    }
    std::cout << "pass: " << (rep.pass ? "PASS" : (rep.any_fail ? "FAIL" : "INDETERMINATE"))
              << "\n";
  });

  // probe-elem
  auto* pe_cmd = app.add_subcommand("probe-elem", "bounded elementary-closure probe");
  std::string g_spec, x_spec;
  int n_max = 6;
  add_oracle_flags(pe_cmd);
  pe_cmd->add_option("--g", g_spec, "subject word g")->required();
  pe_cmd->add_option("--x", x_spec, "candidate word x")->required();
  pe_cmd->add_option("--nmax", n_max, "exponent bound");
  pe_cmd->callback([&]() {
    Presentation p = load_presentation(pres_path);
    OraclePtr o = pick_oracle(p, oracle_kind, closure_radius, work_cap);
    ElementaryProbeReport rep =
        probe_elementary(o, parse_word(p.alphabet, g_spec), parse_word(p.alphabet, x_spec), n_max);
    std::cout << "verdict: " << to_string(rep.verdict) << "\n";
    if (rep.verdict != ProbeVerdict::NotWithinBound) std::cout << "n: " << rep.witness_n << "\n";
    std::cout << "x_torsion: " << (rep.x_torsion ? std::to_string(rep.x_order) : "none") << "\n";
    std::cout << "certificate: " << to_string(rep.cert) << "\n";
  });

  // probe-comm
  auto* pc_cmd = app.add_subcommand("probe-comm", "bounded commensurability probe");
  std::string h_spec;
  int exp_bound = 3, conj_len = 2;
  pc_cmd->set_help_flag("--help", "print help");  // frees -h for the word flag
  add_oracle_flags(pc_cmd);
  pc_cmd->add_option("--g", g_spec, "first word")->required();
  pc_cmd->add_option("--h", h_spec, "second word")->required();
  pc_cmd->add_option("--kmax", exp_bound, "exponent bound");
  pc_cmd->add_option("--conj-len", conj_len, "conjugator length bound");
  pc_cmd->callback([&]() {
    Presentation p = load_presentation(pres_path);
    OraclePtr o = pick_oracle(p, oracle_kind, closure_radius, work_cap);
    CommensurabilityReport rep = probe_commensurable(
        o, parse_word(p.alphabet, g_spec), parse_word(p.alphabet, h_spec), exp_bound, conj_len);
    if (rep.found) {
      std::cout << "verdict: COMMENSURABLE\n";
      std::cout << "k: " << rep.k << "\n";
      std::cout << "l: " << rep.l << "\n";
      std::cout << "a: " << word_to_string(p.alphabet, rep.conjugator) << "\n";
    } else {
      std::cout << "verdict: NOT_WITHIN_BOUND\n";
    }
    std::cout << "certificate: " << to_string(rep.cert) << "\n";
  });

  // chain
  auto* chain_cmd = app.add_subcommand("chain", "generate a quotient-chain plan");
  chain_cmd->require_subcommand(1);
  auto* rips_cmd = chain_cmd->add_subcommand("rips", "Rips-type chain");
  rips_cmd->set_help_flag("--help", "print help");  // frees -h for the seed-group flag
  std::string q_path, h_path, out_dir, w_file, multipliers = "2,2";
  int chain_steps = 3;
  long long chain_m1 = 3;
  unsigned long long chain_seed = 1;
  rips_cmd->add_option("--q", q_path, "quotient target presentation")->required();
  rips_cmd->add_option("--h", h_path, "hyperbolic seed presentation")->required();
  rips_cmd->add_option("--steps", chain_steps, "steps to emit");
  rips_cmd->add_option("--m1", chain_m1, "schedule seed");
  rips_cmd->add_option("--seed", chain_seed, "osin word RNG seed");
  rips_cmd->add_option("--w-file", w_file, "osin word file");
  rips_cmd->add_option("--out", out_dir, "plan directory")->required();
  rips_cmd->callback([&]() {
    RipsParams rp;
    rp.m_seed = chain_m1;
    rp.seed = chain_seed;
    if (!w_file.empty()) rp.w_file = w_file;
    ChainPlan plan = build_rips_chain(load_presentation(q_path), load_presentation(h_path),
                                      chain_steps, rp);
    save_plan(plan, out_dir);
    std::cout << "steps: " << plan.steps.size() << "\n";
    std::cout << "plan_dir: " << out_dir << "\n";
  });
  auto* monster_cmd = chain_cmd->add_subcommand("monster", "monster-type chain");
  std::string g0_path;
  monster_cmd->add_option("--g0", g0_path, "torsion-free base presentation")->required();
  monster_cmd->add_option("--multipliers", multipliers, "rank-one multiplier sequence");
  monster_cmd->add_option("--steps", chain_steps, "stages to emit");
  monster_cmd->add_option("--m1", chain_m1, "schedule seed");
  monster_cmd->add_option("--out", out_dir, "plan directory")->required();
  monster_cmd->callback([&]() {
    RankOneSpec spec;
    for (int m : parse_int_list(multipliers)) spec.multipliers.push_back(m);
    MonsterParams mp;
    mp.m_seed = chain_m1;
    ChainPlan plan = build_monster_chain(load_presentation(g0_path), {spec}, chain_steps, mp);
    save_plan(plan, out_dir);
    std::cout << "steps: " << plan.steps.size() << "\n";
    std::cout << "plan_dir: " << out_dir << "\n";
  });

  // audit-chain
  auto* audit_cmd = app.add_subcommand("audit-chain", "per-step evidence table");
  std::string plan_dir;
  AuditParams ap;
  audit_cmd->add_option("--plan", plan_dir, "plan directory")->required();
  audit_cmd->add_option("--radius", ap.ball_radius, "injectivity-radius ball radius");
  audit_cmd->add_option("--closure-radius", ap.closure_radius, "oracle radius");
  audit_cmd->add_option("--tmax", ap.t_max, "profile scale");
  audit_cmd->callback([&]() {
    ChainPlan plan;
    for (int i = 0;; ++i) {
      std::filesystem::path p =
          std::filesystem::path(plan_dir) / ("step_" + std::to_string(i) + ".pres");
      if (!std::filesystem::exists(p)) break;
      ChainStep step;
      step.pres = load_presentation(p.string());
      plan.steps.push_back(std::move(step));
    }
    if (plan.steps.empty()) throw std::invalid_argument("no step_*.pres files in " + plan_dir);
    ChainAudit audit = audit_chain(plan, ap);
    std::string csv = format_audit_csv(audit);
    std::ofstream out(std::filesystem::path(plan_dir) / "audit.csv");
    out << csv;
    std::cout << csv;
  });

  // sync-report
  auto* sync_cmd = app.add_subcommand("sync-report", "synchronization ratios at scales");
  std::vector<std::string> pres_paths;
  std::string scales_spec = "2,4,6", product_factors;
  double tolerance = 0.5;
  sync_cmd->add_option("--pres", pres_paths, "factor presentations")->required();
  sync_cmd->add_option("--scales", scales_spec, "comma-separated scales");
  sync_cmd->add_option("--tolerance", tolerance, "PASS threshold for min ratio sum");
  sync_cmd->add_option("--tmax", t_max, "profile scale bound");
  sync_cmd->add_option("--mode", mode_str, "exact|interval");
  sync_cmd->add_option("--product-factors", product_factors,
                       "factor presentations of the free product, for the sandwich check");
  sync_cmd->add_option("--closure-radius", closure_radius, "finite-table radius");
  sync_cmd->callback([&]() {
    ProfileMode mode = parse_mode(mode_str);
    std::vector<HyperbolicityProfile> profiles;
    for (const std::string& path : pres_paths) {
      Presentation p = load_presentation(path);
      Ball b = make_metric_ball(pick_oracle(p, "auto", closure_radius, work_cap), t_max);
      profiles.push_back(hyperbolicity_function(b, t_max, mode));
    }
    HyperbolicityProfile product;
    bool have_product = false;
    if (!product_factors.empty()) {
      Ball b = make_metric_ball(product_oracle(product_factors, closure_radius, work_cap), t_max);
      product = hyperbolicity_function(b, t_max, mode);
      have_product = true;
    }
    SyncReport rep = synchronized_report(profiles, parse_int_list(scales_spec), tolerance,
                                         have_product ? &product : nullptr);
    std::cout << "t,ratio_sum\n";
    for (const SyncScaleRow& row : rep.rows) std::cout << row.t << "," << row.ratio_sum << "\n";
    std::cout << "min_ratio_sum: " << rep.min_ratio_sum << "\n";
    std::cout << "pass_at_scales: " << (rep.pass_at_scales ? "PASS" : "FAIL") << "\n";
    if (rep.sandwich_checked) {
      std::cout << "sandwich_lower: " << (rep.lower_ok ? "PASS" : "FAIL") << "\n";
      std::cout << "sandwich_upper: " << (rep.upper_ok ? "PASS" : "FAIL") << "\n";
    }
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapExceeded& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const WorkCapExceeded& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const GuardViolation& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
