// Acceptance gate: one pass/fail line per criterion. argv[1] is the path to
// the ggt-cli binary (used by the determinism criterion).

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ggt/ball.hpp"
#include "ggt/chains.hpp"
#include "ggt/coset_graph.hpp"
#include "ggt/hyperbolicity.hpp"
#include "ggt/oracle.hpp"
#include "ggt/parallel.hpp"
#include "ggt/presentation.hpp"
#include "ggt/smallcancel.hpp"
#include "ggt/wordsystems.hpp"

using namespace ggt;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

Presentation pres(const std::string& gens, const std::vector<std::string>& rels) {
  return make_presentation(gens, rels);
}

Word W(const OrderedAlphabet& a, const std::string& s) { return parse_word(a, s); }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Records the first failing condition; later checks are still evaluated so
// a criterion body can run to completion.
struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// criterion 1: tree flatness
bool crit_tree_flatness(std::string& detail) {
  Check c;
  auto t0 = Clock::now();
  Ball b = build_ball(make_free_oracle(OrderedAlphabet(std::vector<char>{'a', 'b'})), 12);
  auto p = hyperbolicity_function(b, 12, ProfileMode::Exact);
  double secs = seconds_since(t0);
  c.require(p.samples.size() == 13, "expected 13 profile samples");
  for (const auto& s : p.samples) {
    c.require(s.f == 0.0, "f(" + std::to_string(s.t) + ") = " + fmt(s.f) + ", expected 0");
  }
  c.require(p.cert == Certificate::Certified, "profile not certified");
  c.require(secs <= 60.0, "runtime " + fmt(secs) + "s exceeds 60s");
  detail = c.detail;
  return c.ok;
}

// ---------------------------------------------------------------------------
// criterion 2: Z^2 linear growth
bool crit_z2_growth(std::string& detail) {
  Check c;
  Ball b = build_ball(make_abelian_oracle(pres("a b", {"abAB"})), 12);
  auto p = hyperbolicity_function(b, 12, ProfileMode::Exact);
  for (int k = 1; k <= 3; ++k) {
    c.require(p.value_at(4 * k) >= static_cast<double>(k) - 1e-12,
              "f(" + std::to_string(4 * k) + ") = " + fmt(p.value_at(4 * k)) + " < " +
                  std::to_string(k));
  }
  auto rep = sublinearity_report(p);
  c.require(!rep.insufficient_data, "sublinearity report empty");
  for (const auto& row : rep.rows) {
    if (row.t == 4 || row.t == 8 || row.t == 12) {
      c.require(row.ratio >= 0.25 - 1e-12,
                "ratio at t=" + std::to_string(row.t) + " is " + fmt(row.ratio));
    }
  }
  detail = c.detail;
  return c.ok;
}

// ---------------------------------------------------------------------------
// criterion 3: free-product sandwich (ball + profile reused by criterion 4)
bool crit_sandwich(std::string& detail, std::optional<Ball>& prod_ball,
                   std::optional<HyperbolicityProfile>& prod_prof) {
  Check c;
  auto z4 = make_finite_table_oracle(pres("a", {"aaaa"}), 6);
  auto z6 = make_finite_table_oracle(pres("a", {"aaaaaa"}), 8);
  auto prod = make_free_product_oracle({z4, z6});
  auto p4 = hyperbolicity_function(build_ball(z4, 10), 10, ProfileMode::Exact);
  auto p6 = hyperbolicity_function(build_ball(z6, 10), 10, ProfileMode::Exact);
  prod_ball = build_ball(prod, 10);
  prod_prof = hyperbolicity_function(*prod_ball, 10, ProfileMode::Exact);
  for (int t = 0; t <= 10; ++t) {
    double expect = std::max(p4.value_at(t), p6.value_at(t));
    double got = prod_prof->value_at(t);
    c.require(std::fabs(got - expect) <= 1e-12,
              "t=" + std::to_string(t) + ": product f " + fmt(got) + " != max " + fmt(expect));
  }
  detail = c.detail;
  return c.ok;
}

// ---------------------------------------------------------------------------
// criterion 4: n-gon neighborhood bound in the radius-3 ball of Z/4 * Z/6

struct NgonData {
  const Ball* ball = nullptr;
  const HyperbolicityProfile* prof = nullptr;
  std::vector<int> verts;                           // ball ids with depth <= 3
  int V = 0;
  std::vector<std::vector<std::vector<int>>> side;  // one geodesic per ordered pair (ball ids)
  std::vector<int> comp;                            // ball id -> compressed index
  int M = 0;
  std::vector<int> dist;                            // M x M distances
};

NgonData build_ngon_data(const Ball& b, const HyperbolicityProfile& prof) {
  NgonData g;
  g.ball = &b;
  g.prof = &prof;
  for (int id = 0; id < b.size(); ++id) {
    if (b.depth(id) <= 3) g.verts.push_back(id);
  }
  g.V = static_cast<int>(g.verts.size());
  g.comp.assign(static_cast<std::size_t>(b.size()), -1);
  std::vector<int> used;
  auto touch = [&](int id) {
    if (g.comp[static_cast<std::size_t>(id)] < 0) {
      g.comp[static_cast<std::size_t>(id)] = static_cast<int>(used.size());
      used.push_back(id);
    }
  };
  g.side.assign(static_cast<std::size_t>(g.V),
                std::vector<std::vector<int>>(static_cast<std::size_t>(g.V)));
  for (int i = 0; i < g.V; ++i) {
    for (int j = 0; j < g.V; ++j) {
      std::vector<int> path;
      if (i == j) {
        path = {g.verts[static_cast<std::size_t>(i)]};
      } else {
        path = enumerate_geodesics(b, g.verts[static_cast<std::size_t>(i)],
                                   g.verts[static_cast<std::size_t>(j)], 100000)
                   .front();
      }
      for (int id : path) touch(id);
      g.side[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(path);
    }
  }
  g.M = static_cast<int>(used.size());
  g.dist.assign(static_cast<std::size_t>(g.M) * static_cast<std::size_t>(g.M), 0);
  for (int x = 0; x < g.M; ++x) {
    for (int y = x + 1; y < g.M; ++y) {
      int d = b.distance(used[static_cast<std::size_t>(x)], used[static_cast<std::size_t>(y)]);
      g.dist[static_cast<std::size_t>(x) * static_cast<std::size_t>(g.M) +
             static_cast<std::size_t>(y)] = d;
      g.dist[static_cast<std::size_t>(y) * static_cast<std::size_t>(g.M) +
             static_cast<std::size_t>(x)] = d;
    }
  }
  return g;
}

// Max over side points of the min distance to the union of the other sides,
// mirroring ngon_neighborhood_check on precomputed one-geodesic sides.
int tuple_worst(const NgonData& g, const int* v, int n, int& perimeter) {
  perimeter = 0;
  const std::vector<int>* sides[6];
  for (int i = 0; i < n; ++i) {
    sides[i] = &g.side[static_cast<std::size_t>(v[i])][static_cast<std::size_t>(v[(i + 1) % n])];
    perimeter += static_cast<int>(sides[i]->size()) - 1;
  }
  int worst = 0;
  for (int i = 0; i < n; ++i) {
    for (int p : *sides[i]) {
      const int* row = &g.dist[static_cast<std::size_t>(g.comp[static_cast<std::size_t>(p)]) *
                               static_cast<std::size_t>(g.M)];
      int best = INT_MAX;
      for (int j = 0; j < n && best > 0; ++j) {
        if (j == i) continue;
        for (int q : *sides[j]) best = std::min(best, row[g.comp[static_cast<std::size_t>(q)]]);
      }
      worst = std::max(worst, best);
    }
  }
  return worst;
}

bool tuple_ok(const NgonData& g, const int* v, int n, double factor) {
  int perimeter = 0;
  int worst = tuple_worst(g, v, n, perimeter);
  return worst <= factor * g.prof->value_at(perimeter) + 1e-12;
}

bool crit_ngon(std::string& detail, const std::optional<Ball>& prod_ball,
               const std::optional<HyperbolicityProfile>& prod_prof) {
  Check c;
  if (!prod_ball || !prod_prof) {
    detail = "free-product ball unavailable (criterion 3 setup failed)";
    return false;
  }
  NgonData g = build_ngon_data(*prod_ball, *prod_prof);
  c.require(g.V == 45, "radius-3 ball has " + std::to_string(g.V) + " vertices, expected 45");
  double factor[7];
  for (int n = 3; n <= 6; ++n) factor[n] = 1.0 + std::log2(static_cast<double>(n - 1));

  long long violations = 0;
  // n = 3, 4: exhaustive over vertex tuples.
  for (int i = 0; i < g.V; ++i) {
    for (int j = 0; j < g.V; ++j) {
      for (int k = 0; k < g.V; ++k) {
        int v[3] = {i, j, k};
        if (!tuple_ok(g, v, 3, factor[3])) ++violations;
      }
    }
  }
  std::atomic<long long> violations4{0};
  std::size_t cube = static_cast<std::size_t>(g.V) * static_cast<std::size_t>(g.V) *
                     static_cast<std::size_t>(g.V);
  parallel_chunks(cube, [&](std::size_t begin, std::size_t end, int) {
    long long local = 0;
    for (std::size_t idx = begin; idx < end; ++idx) {
      int v[4];
      v[0] = static_cast<int>(idx / (static_cast<std::size_t>(g.V) * static_cast<std::size_t>(g.V)));
      v[1] = static_cast<int>((idx / static_cast<std::size_t>(g.V)) % static_cast<std::size_t>(g.V));
      v[2] = static_cast<int>(idx % static_cast<std::size_t>(g.V));
      for (int l = 0; l < g.V; ++l) {
        v[3] = l;
        if (!tuple_ok(g, v, 4, factor[4])) ++local;
      }
    }
    violations4 += local;
  });
  violations += violations4.load();

  // n = 5, 6: deterministic seeded sampling of vertex tuples.
  std::mt19937_64 rng(97);
  std::uniform_int_distribution<int> pick(0, g.V - 1);
  for (int n = 5; n <= 6; ++n) {
    for (int s = 0; s < 400000; ++s) {
      int v[6];
      for (int i = 0; i < n; ++i) v[i] = pick(rng);
      if (!tuple_ok(g, v, n, factor[n])) ++violations;
    }
  }
  c.require(violations == 0, std::to_string(violations) + " bound violations");

  // Cross-check the fast path against the library check on sampled tuples.
  std::mt19937_64 rng2(11);
  for (int n = 3; n <= 6; ++n) {
    for (int s = 0; s < 200; ++s) {
      int v[6];
      for (int i = 0; i < n; ++i) v[i] = pick(rng2);
      std::vector<Path> sides;
      for (int i = 0; i < n; ++i) {
        sides.push_back(g.side[static_cast<std::size_t>(v[i])]
                              [static_cast<std::size_t>(v[(i + 1) % n])]);
      }
      auto rep = ngon_neighborhood_check(*g.ball, sides, *g.prof);
      int perimeter = 0;
      int worst = tuple_worst(g, v, n, perimeter);
      c.require(rep.perimeter == perimeter && std::fabs(rep.worst_distance - worst) <= 1e-12 &&
                    rep.pass == tuple_ok(g, v, n, factor[n]),
                "library n-gon check disagrees with the exhaustive scan at n=" +
                    std::to_string(n));
    }
  }
  detail = c.detail;
  return c.ok;
}

// ---------------------------------------------------------------------------
// criterion 5: classical piece exactness
bool crit_classical(std::string& detail) {
  Check c;
  OrderedAlphabet a2(std::vector<char>{'a', 'b'});
  auto sym = symmetrize(a2, {W(a2, "abAB")});
  auto r1 = check_classical(a2, sym, 0.3);
  c.require(r1.max_piece == 1, "commutator max piece " + std::to_string(r1.max_piece));
  c.require(r1.pass, "C'(0.3) should PASS");
  auto r2 = check_classical(a2, sym, 0.25);
  c.require(!r2.pass, "C'(0.25) should FAIL");
  OrderedAlphabet a4(std::vector<char>{'a', 'b', 'c', 'd'});
  auto surf = symmetrize(a4, {W(a4, "abABcdCD")});
  auto r3 = check_classical(a4, surf, 1.0 / 6);
  c.require(r3.max_piece == 1, "genus-2 max piece " + std::to_string(r3.max_piece));
  c.require(r3.pass, "genus-2 C'(1/6) should PASS");
  detail = c.detail;
  return c.ok;
}

// ---------------------------------------------------------------------------
// criterion 6: Dehn / ball-closure agreement on the genus-2 surface group
bool crit_oracle_agreement(std::string& detail) {
  Check c;
  auto t0 = Clock::now();
  Presentation p = pres("a b c d", {"abABcdCD"});
  auto dehn = make_dehn_oracle(p);
  c.require(dehn->certificate() == Certificate::Certified, "dehn oracle not certified");
  auto closure = make_ball_closure_oracle(p, 6, 400'000'000);
  long long disagreements = 0, definite_pairs = 0, total = 0;
  Word cur;
  std::function<void()> rec = [&]() {
    for (int r = 0; r < 8; ++r) {
      Letter l = p.alphabet.letter_at_rank(r);
      if (!cur.empty() && cur.back() == letter_inverse(l)) continue;
      cur.push_back(l);
      ++total;
      Verdict vd = dehn->is_trivial(cur);
      Verdict vc = closure->is_trivial(cur);
      if (vd != Verdict::Unknown && vc != Verdict::Unknown) {
        ++definite_pairs;
        if (vd != vc) ++disagreements;
      }
      if (cur.size() < 6) rec();
      cur.pop_back();
    }
  };
  rec();
  double secs = seconds_since(t0);
  c.require(total == 156864, "enumerated " + std::to_string(total) + " words");
  c.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  c.require(secs <= 300.0, "runtime " + fmt(secs) + "s exceeds 300s");
  detail = c.detail;
  return c.ok;
}

// ---------------------------------------------------------------------------
// criterion 7: eps=0 over the free oracle reduces to classical pieces
bool crit_eps0_reduction(std::string& detail) {
  Check c;
  OrderedAlphabet a(std::vector<char>{'a', 'b'});
  auto o = make_free_oracle(a);
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> len(2, 7);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> nrel(1, 2);
  int done = 0;
  while (done < 20) {
    std::vector<Word> relators;
    int want = nrel(rng);
    for (int r = 0; r < want; ++r) {
      Word w;
      int n = len(rng);
      for (int i = 0; i < n; ++i) w.push_back(a.letter_at_rank(pick(rng)));
      w = cyclic_reduce(free_reduce(w));
      if (!w.empty()) relators.push_back(w);
    }
    if (relators.empty()) continue;
    auto sym = symmetrize(a, relators);
    auto eps = find_epsilon_pieces(o, sym, 0, 0.5);
    auto cls = check_classical(a, sym, 0.5);
    c.require(eps.piece_set(a) == cls.piece_set(a),
              "piece sets differ on system " + std::to_string(done));
    c.require(eps.max_piece == cls.max_piece, "max piece differs on system " + std::to_string(done));
    ++done;
  }
  detail = c.detail;
  return c.ok;
}

// ---------------------------------------------------------------------------
// criterion 8: schedule rows, eps' value, clause-3 failure report
bool crit_schedule(std::string& detail) {
  Check c;
  auto s = build_schedule(3, 2);
  c.require(s.rows.size() == 2 && s.rows[0] == std::vector<long long>{3, 4} &&
                s.rows[1] == std::vector<long long>{6, 7, 8, 9, 10},
            "schedule(3,2) rows wrong");
  c.require(std::fabs(eps_prime(10, 2, 5, 1) - 979.0) <= 1e-9,
            "eps'(10,2,5,1) = " + fmt(eps_prime(10, 2, 5, 1)));
  // L=1, m_bar=4 system: z=c, U=a, V=b, schedule(3,1).
  OrderedAlphabet a(std::vector<char>{'a', 'b', 'c'});
  auto ws = build_word_system({W(a, "c")}, W(a, "a"), W(a, "b"), build_schedule(3, 1));
  ScParams p;
  p.lambda = 1;
  p.c = 0;
  p.eps = 0;
  p.mu = 0.01;
  p.rho = 100;
  auto rep = validate_conditions(ws, p);
  bool saw = false;
  for (const auto& cl : rep.clauses) {
    if (std::fabs(cl.lhs - 1.0) <= 1e-9 && std::fabs(cl.rhs - 30.0) <= 1e-9) {
      saw = true;
      c.require(cl.status == ClauseStatus::Fail, "clause (1, 30) not reported FAIL");
    }
  }
  c.require(saw, "no clause with lhs 1, rhs 30");
  c.require(rep.any_fail && !rep.pass, "report should record a failure");
  detail = c.detail;
  return c.ok;
}

// ---------------------------------------------------------------------------
// criterion 9: injectivity radii
bool crit_inj_radii(std::string& detail) {
  Check c;
  {
    Presentation za = pres("a", {});
    auto dom = build_ball(make_free_oracle(za.alphabet), 5);
    auto z6 = make_finite_table_oracle(pres("a", {"aaaaaa"}), 8);
    Homomorphism h = parse_homomorphism(za.alphabet, z6, "a->a");
    auto r = injectivity_radius(h, dom);
    c.require(!r.unbounded_up_to && r.value == 2,
              "F(a)->Z/6 radius " + std::to_string(r.value) + ", expected 2");
  }
  {
    Presentation f2 = pres("a b", {});
    auto dom = build_ball(make_free_oracle(f2.alphabet), 4);
    auto z2 = make_abelian_oracle(pres("a b", {"abAB"}));
    Homomorphism h = parse_homomorphism(f2.alphabet, z2, "a->a,b->b");
    auto r = injectivity_radius(h, dom);
    c.require(!r.unbounded_up_to && r.value == 1,
              "F2->Z^2 radius " + std::to_string(r.value) + ", expected 1");
  }
  detail = c.detail;
  return c.ok;
}

// ---------------------------------------------------------------------------
// criterion 10: chain round-trip and audit
std::string step_param(const ChainStep& step, const std::string& key) {
  for (const auto& [k, v] : step.params) {
    if (k == key) return v;
  }
  return "";
}

bool crit_chains(std::string& detail) {
  Check c;
  Presentation genus2 = pres("a b c d", {"abABcdCD"});
  {
    ChainPlan plan = build_rips_chain(pres("g", {"gg"}), genus2, 3, RipsParams{});
    c.require(plan.steps.size() == 3, "rips chain emitted " + std::to_string(plan.steps.size()) +
                                          " steps");
    for (const auto& step : plan.steps) {
      std::istringstream in(format_presentation(step.pres));
      Presentation back = parse_presentation(in);
      c.require(back.alphabet == step.pres.alphabet && back.relators == step.pres.relators,
                "presentation round-trip failed");
    }
    for (std::size_t i = 1; i < plan.steps.size(); ++i) {
      c.require(plan.steps[i].audit_inj.has_value() && plan.steps[i].audit_inj->value >= 1,
                "step " + std::to_string(i) + " injectivity radius below 1");
    }
  }
  {
    std::vector<RankOneSpec> family(1);
    family[0].multipliers = {2, 2};
    ChainPlan plan = build_monster_chain(genus2, family, 1, MonsterParams{});
    c.require(plan.steps.size() == 3, "monster chain emitted " +
                                          std::to_string(plan.steps.size()) + " steps");
    if (plan.steps.size() == 3) {
      const ChainStep& am = plan.steps[1];
      c.require(am.kind == StepKind::Amalgam && am.added_relators.size() == 1,
                "stage-0 amalgam malformed");
      c.require(step_param(am, "multiplier") == "2" && step_param(am, "u_k") == "A",
                "amalgam parameters wrong");
      // u_1 (g^1)^-2 with the fresh root letter e.
      c.require(am.added_relators[0] == cyclic_reduce(W(am.pres.alphabet, "AEE")),
                "amalgam relator is not u_1 (g^1)^-2");
      const ChainStep& sc = plan.steps[2];
      c.require(sc.kind == StepKind::ScQuotient && sc.added_relators.size() == 4,
                "sc stage malformed");
      c.require(step_param(sc, "block1_relators") == "1" &&
                    step_param(sc, "block2_relators") == "3",
                "word-system blocks wrong");
      // Exponent distinctness inherited from the block schedules.
      for (int k : {1, 3}) {
        auto s = build_schedule(2, k);
        std::set<long long> all;
        std::size_t total = 0;
        for (const auto& row : s.rows) {
          all.insert(row.begin(), row.end());
          total += row.size();
        }
        c.require(all.size() == total, "schedule(2," + std::to_string(k) + ") exponents collide");
      }
    }
  }
  detail = c.detail;
  return c.ok;
}

// ---------------------------------------------------------------------------
// criterion 11: CLI determinism across worker counts

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool same_dirs(const fs::path& a, const fs::path& b, std::string& why) {
  std::vector<std::string> na, nb;
  for (const auto& e : fs::directory_iterator(a)) na.push_back(e.path().filename().string());
  for (const auto& e : fs::directory_iterator(b)) nb.push_back(e.path().filename().string());
  std::sort(na.begin(), na.end());
  std::sort(nb.begin(), nb.end());
  if (na != nb) {
    why = "file lists differ under " + a.filename().string();
    return false;
  }
  for (const auto& name : na) {
    if (slurp(a / name) != slurp(b / name)) {
      why = (a / name).string() + " differs";
      return false;
    }
  }
  return true;
}

bool crit_determinism(std::string& detail, const std::string& cli) {
  Check c;
  if (cli.empty()) {
    detail = "cli path not supplied (argv[1])";
    return false;
  }
  fs::path dir = fs::temp_directory_path() / "ggt_acceptance_cli";
  fs::remove_all(dir);
  fs::create_directories(dir / "w1");
  fs::create_directories(dir / "w4");
  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream out(dir / name);
    out << body;
  };
  write("f2.pres", format_presentation(pres("a b", {})));
  write("za.pres", format_presentation(pres("a", {})));
  write("z2.pres", format_presentation(pres("a b", {"abAB"})));
  write("z4.pres", format_presentation(pres("a", {"aaaa"})));
  write("z6.pres", format_presentation(pres("a", {"aaaaaa"})));
  write("surf.pres", format_presentation(pres("a b c d", {"abABcdCD"})));
  write("cm.pres", format_presentation(pres("a b", {"abaB"})));
  write("q.pres", format_presentation(pres("g", {"gg"})));
  write("params.txt", "lambda 1\nc 0\neps 0\nmu 0.01\nrho 100\n");

  struct CliCase {
    std::string name, args;
  };
  std::vector<CliCase> cases = {
      {"ball", "ball --pres ../z2.pres --oracle abelian --radius 3"},
      {"profile", "profile --pres ../f2.pres --oracle free --tmax 6 --mode exact"},
      {"injr",
       "inj-radius --dom ../za.pres --cod ../z6.pres --map 'a->a' --radius 5 "
       "--cod-oracle finite --closure-radius 8"},
      {"pieces", "pieces --pres ../surf.pres --oracle free --eps 0 --mu 0.1666"},
      {"checksc", "check-sc --pres ../surf.pres --mu 0.1666"},
      {"checkgsc",
       "check-gsc --pres ../cm.pres --oracle free --lambda 1 --c 0 --eps 0 --mu 0.5 --rho 4 "
       "--radius 4"},
      {"gensys", "gen-system --gens 'a b c d' --z c,d --u a --v b --m1 3 --k 2"},
      {"valsys",
       "validate-system --gens 'a b c' --z c --u a --v b --m1 3 --k 1 --params ../params.txt"},
      {"probeelem", "probe-elem --pres ../f2.pres --oracle free --g a --x aa --nmax 5"},
      {"probecomm",
       "probe-comm --pres ../f2.pres --oracle free --g a --h Bab --kmax 3 --conj-len 1"},
      {"chainrips", "chain rips --q ../q.pres --h ../surf.pres --steps 3 --out plan_rips"},
      {"chainmonster",
       "chain monster --g0 ../surf.pres --multipliers 2,2 --steps 1 --out plan_mon"},
      {"auditchain", "audit-chain --plan plan_rips --radius 2 --closure-radius 4 --tmax 2"},
      {"syncreport",
       "sync-report --pres ../z4.pres --pres ../z6.pres --scales 2,4 --tmax 4 --mode exact "
       "--product-factors ../z4.pres,../z6.pres --closure-radius 8"},
  };

  for (const auto& cs : cases) {
    for (int workers : {1, 4}) {
      fs::path sub = dir / ("w" + std::to_string(workers));
      std::string cmd = "cd '" + sub.string() + "' && GGT_WORKERS=" + std::to_string(workers) +
                        " '" + cli + "' " + cs.args + " > '" + cs.name + ".out' 2>&1";
      int rc = std::system(cmd.c_str());
      c.require(rc == 0, cs.name + " exited nonzero with " + std::to_string(workers) + " workers");
    }
    c.require(slurp(dir / "w1" / (cs.name + ".out")) == slurp(dir / "w4" / (cs.name + ".out")),
              cs.name + " output differs between worker counts");
  }
  for (const std::string& plan : {std::string("plan_rips"), std::string("plan_mon")}) {
    std::string why;
    c.require(same_dirs(dir / "w1" / plan, dir / "w4" / plan, why), why);
  }
  fs::remove_all(dir);
  detail = c.detail;
  return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
  setenv("GGT_WORKERS", "4", 1);
  std::string cli = argc > 1 ? fs::absolute(argv[1]).string() : "";

  std::optional<Ball> prod_ball;
  std::optional<HyperbolicityProfile> prod_prof;

  struct Criterion {
    std::string label;
    std::function<bool(std::string&)> fn;
  };
  std::vector<Criterion> criteria = {
      {"tree flatness", crit_tree_flatness},
      {"Z^2 linear growth", crit_z2_growth},
      {"free-product sandwich",
       [&](std::string& d) { return crit_sandwich(d, prod_ball, prod_prof); }},
      {"n-gon bound", [&](std::string& d) { return crit_ngon(d, prod_ball, prod_prof); }},
      {"classical piece exactness", crit_classical},
      {"oracle agreement", crit_oracle_agreement},
      {"eps0 reduction", crit_eps0_reduction},
      {"schedule and conditions", crit_schedule},
      {"injectivity radii", crit_inj_radii},
      {"chain round-trip and audit", crit_chains},
      {"determinism", [&](std::string& d) { return crit_determinism(d, cli); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << (i + 1) << " (" << criteria[i].label << "): "
              << (ok ? "PASS" : "FAIL") << (ok || detail.empty() ? "" : " — " + detail) << "\n";
    if (!ok) ++failures;
  }
  std::cout << "overall: " << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return failures == 0 ? 0 : 1;
}
