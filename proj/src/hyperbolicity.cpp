#include "ggt/hyperbolicity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <set>
#include <unordered_map>

#include "ggt/errors.hpp"
#include "ggt/parallel.hpp"

namespace ggt {

const char* to_string(ProfileMode m) {
  return m == ProfileMode::Exact ? "EXACT" : "INTERVAL_LOWER";
}

namespace {

// Memoizing distance lookup; one instance per worker.
class DistCache {
 public:
  explicit DistCache(const Ball& b) : b_(b) {}

  int operator()(int x, int y) {
    if (x == y) return 0;
    std::uint64_t key = x < y ? (static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint32_t>(y)
                              : (static_cast<std::uint64_t>(y) << 32) | static_cast<std::uint32_t>(x);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int d = b_.distance(x, y);
    memo_.emplace(key, d);
    return d;
  }

 private:
  const Ball& b_;
  std::unordered_map<std::uint64_t, int> memo_;
};

std::vector<int> interval_points(const Ball& b, DistCache& dc, int x, int y) {
  int dxy = dc(x, y);
  std::vector<int> result{x};
  std::set<int> cur{x};
  for (int t = 1; t <= dxy; ++t) {
    std::set<int> next;
    for (int p : cur) {
      for (int r = 0; r < b.degree(); ++r) {
        std::int32_t q = b.neighbor(p, r);
        if (q < 0) continue;
        if (dc(q, y) == dxy - t) next.insert(q);
      }
    }
    cur = std::move(next);
    result.insert(result.end(), cur.begin(), cur.end());
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

void geodesics_dfs(const Ball& b, DistCache& dc, int cur, int y, int remaining,
                   std::vector<int>& path, std::vector<Path>& out, int cap) {
  if (remaining == 0) {
    if (static_cast<int>(out.size()) >= cap) {
      throw CapExceeded("geodesic enumeration cap exceeded");
    }
    out.push_back(path);
    return;
  }
  for (int r = 0; r < b.degree(); ++r) {
    std::int32_t q = b.neighbor(cur, r);
    if (q < 0) continue;
    if (dc(q, y) != remaining - 1) continue;
    path.push_back(q);
    geodesics_dfs(b, dc, q, y, remaining - 1, path, out, cap);
    path.pop_back();
  }
}

std::vector<Path> geodesics_local(const Ball& b, DistCache& dc, int x, int y, int cap) {
  std::vector<Path> out;
  std::vector<int> path{x};
  geodesics_dfs(b, dc, x, y, dc(x, y), path, out, cap);
  return out;
}

void validate_geodesic(const Ball& b, const Path& side) {
  if (side.empty()) throw std::invalid_argument("side path must contain at least one vertex");
  for (std::size_t i = 1; i < side.size(); ++i) {
    bool adjacent = false;
    for (int r = 0; r < b.degree(); ++r) {
      if (b.neighbor(side[i - 1], r) == side[i]) {
        adjacent = true;
        break;
      }
    }
    if (!adjacent) throw std::invalid_argument("side path has a non-edge step");
  }
  if (static_cast<int>(side.size()) - 1 != b.distance(side.front(), side.back())) {
    throw std::invalid_argument("side path is not geodesic");
  }
}

int dist_to_set(const Ball& b, DistCache& dc, int p, const std::vector<int>& pts) {
  int best = std::numeric_limits<int>::max();
  for (int q : pts) best = std::min(best, dc(p, q));
  return best;
}

}  // namespace

TreeComparison tree_comparison(const Ball& b, int x, int y, int z) {
  double dxy = b.distance(x, y), dxz = b.distance(x, z), dyz = b.distance(y, z);
  TreeComparison t;
  t.a = (dxy + dxz - dyz) / 2.0;
  t.b = (dxy + dyz - dxz) / 2.0;
  t.c = (dxz + dyz - dxy) / 2.0;
  return t;
}

double slimness(const Ball& b, const std::array<Path, 3>& sides) {
  for (const Path& s : sides) validate_geodesic(b, s);
  DistCache dc(b);
  double delta = 0;
  for (int i = 0; i < 3; ++i) {
    std::vector<int> others;
    for (int j = 0; j < 3; ++j) {
      if (j != i) others.insert(others.end(), sides[static_cast<std::size_t>(j)].begin(),
                                sides[static_cast<std::size_t>(j)].end());
    }
    for (int p : sides[static_cast<std::size_t>(i)]) {
      delta = std::max(delta, static_cast<double>(dist_to_set(b, dc, p, others)));
    }
  }
  return delta;
}

std::pair<double, double> thinness_and_insize(const Ball& b, const std::array<Path, 3>& sides) {
  // Sides form a closed cycle: x->y, y->z, z->x.
  for (const Path& s : sides) validate_geodesic(b, s);
  if (sides[0].back() != sides[1].front() || sides[1].back() != sides[2].front() ||
      sides[2].back() != sides[0].front()) {
    throw std::invalid_argument("triangle sides do not close up");
  }
  int x = sides[0].front(), y = sides[1].front(), z = sides[2].front();
  TreeComparison tc = tree_comparison(b, x, y, z);
  DistCache dc(b);

  auto reversed = [](const Path& p) { return Path(p.rbegin(), p.rend()); };
  Path xy = sides[0], yz = sides[1], zx = sides[2];
  Path xz = reversed(zx), yx = reversed(xy), zy = reversed(yz);

  double delta_thin = 0;
  auto match_corner = [&](const Path& s1, const Path& s2, double product) {
    for (int t = 0; t <= static_cast<int>(std::floor(product)); ++t) {
      int p = s1[static_cast<std::size_t>(t)];
      int q = s2[static_cast<std::size_t>(t)];
      delta_thin = std::max(delta_thin, static_cast<double>(dc(p, q)));
    }
  };
  match_corner(xy, xz, tc.a);  // corner x
  match_corner(yx, yz, tc.b);  // corner y
  match_corner(zx, zy, tc.c);  // corner z

  // Side points nearest the tripod center.
  auto center_point = [&](const Path& s, double arm) {
    long idx = std::lround(arm);
    idx = std::clamp(idx, 0L, static_cast<long>(s.size()) - 1);
    return s[static_cast<std::size_t>(idx)];
  };
  int cxy = center_point(xy, tc.a);
  int cyz = center_point(yz, tc.b);
  int czx = center_point(zx, tc.c);
  double insize = std::max({static_cast<double>(dc(cxy, cyz)), static_cast<double>(dc(cyz, czx)),
                            static_cast<double>(dc(cxy, czx))});
  return {delta_thin, insize};
}

double HyperbolicityProfile::value_at(int t, bool* clamped) const {
  if (samples.empty()) throw std::invalid_argument("empty profile");
  if (clamped != nullptr) *clamped = false;
  if (t < samples.front().t) return 0;
  if (t > samples.back().t) {
    if (clamped != nullptr) *clamped = true;
    return samples.back().f;
  }
  return samples[static_cast<std::size_t>(t - samples.front().t)].f;
}

HyperbolicityProfile hyperbolicity_function(const Ball& b, int t_max, ProfileMode mode,
                                            int geodesic_cap) {
  if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
  if (b.radius() < t_max) {
    throw GuardViolation("containment guard: profile t_max exceeds ball radius");
  }
  // Triangle vertices with one pinned at identity: companions lie in the
  // closed t_max/2 ball.
  std::vector<int> inner;
  for (int id = 0; id < b.size(); ++id) {
    if (2 * b.depth(id) <= t_max) inner.push_back(id);
  }

  struct PairJob {
    int x, y, perim;
  };
  std::vector<PairJob> jobs;
  {
    DistCache dc(b);
    for (std::size_t i = 0; i < inner.size(); ++i) {
      for (std::size_t j = i; j < inner.size(); ++j) {
        int x = inner[i], y = inner[j];
        int perim = b.depth(x) + b.depth(y) + dc(x, y);
        if (perim <= t_max) jobs.push_back({x, y, perim});
      }
    }
  }

  int workers = worker_count();
  std::vector<std::vector<double>> best_per(static_cast<std::size_t>(workers),
                                            std::vector<double>(static_cast<std::size_t>(t_max + 1), 0));
  std::vector<std::vector<long long>> count_per(
      static_cast<std::size_t>(workers), std::vector<long long>(static_cast<std::size_t>(t_max + 1), 0));
  std::exception_ptr error;
  std::mutex error_mutex;

  parallel_chunks(jobs.size(), [&](std::size_t begin, std::size_t end, int w) {
    try {
      DistCache dc(b);
      auto& best = best_per[static_cast<std::size_t>(w)];
      auto& count = count_per[static_cast<std::size_t>(w)];
      for (std::size_t k = begin; k < end; ++k) {
        const PairJob& job = jobs[k];
        count[static_cast<std::size_t>(job.perim)] += 1;
        std::array<std::pair<int, int>, 3> endpoints{{{0, job.x}, {0, job.y}, {job.x, job.y}}};
        std::array<std::vector<int>, 3> pts;
        std::array<std::vector<Path>, 3> geos;
        for (int s = 0; s < 3; ++s) {
          auto [u, v] = endpoints[static_cast<std::size_t>(s)];
          if (mode == ProfileMode::Exact) {
            geos[static_cast<std::size_t>(s)] = geodesics_local(b, dc, u, v, geodesic_cap);
            std::set<int> uni;
            for (const Path& g : geos[static_cast<std::size_t>(s)]) uni.insert(g.begin(), g.end());
            pts[static_cast<std::size_t>(s)].assign(uni.begin(), uni.end());
          } else {
            pts[static_cast<std::size_t>(s)] = interval_points(b, dc, u, v);
          }
        }
        double delta = 0;
        for (int i = 0; i < 3; ++i) {
          for (int p : pts[static_cast<std::size_t>(i)]) {
            int to_other = std::numeric_limits<int>::max();
            for (int j = 0; j < 3 && to_other > 0; ++j) {
              if (j == i) continue;
              int phi;
              if (mode == ProfileMode::Exact) {
                // Adversarial geodesic choice for the target side.
                phi = 0;
                for (const Path& g : geos[static_cast<std::size_t>(j)]) {
                  phi = std::max(phi, dist_to_set(b, dc, p, g));
                }
              } else {
                phi = dist_to_set(b, dc, p, pts[static_cast<std::size_t>(j)]);
              }
              to_other = std::min(to_other, phi);
            }
            delta = std::max(delta, static_cast<double>(to_other));
          }
        }
        best[static_cast<std::size_t>(job.perim)] = std::max(best[static_cast<std::size_t>(job.perim)], delta);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  });
  if (error) std::rethrow_exception(error);

  HyperbolicityProfile profile;
  profile.ball_radius = b.radius();
  profile.mode = mode;
  profile.cert = b.certificate();
  double running = 0;
  long long total = 0;
  for (int t = 0; t <= t_max; ++t) {
    for (int w = 0; w < workers; ++w) {
      running = std::max(running, best_per[static_cast<std::size_t>(w)][static_cast<std::size_t>(t)]);
      total += count_per[static_cast<std::size_t>(w)][static_cast<std::size_t>(t)];
    }
    profile.samples.push_back({t, running, mode, total});
  }
  return profile;
}

NgonReport ngon_neighborhood_check(const Ball& b, const std::vector<Path>& sides, double bound) {
  int n = static_cast<int>(sides.size());
  if (n < 3 || n > 12) throw std::invalid_argument("n-gon requires 3 <= n <= 12");
  for (const Path& s : sides) validate_geodesic(b, s);
  for (int i = 0; i < n; ++i) {
    if (sides[static_cast<std::size_t>(i)].back() !=
        sides[static_cast<std::size_t>((i + 1) % n)].front()) {
      throw std::invalid_argument("polygon is not closed");
    }
  }
  DistCache dc(b);
  NgonReport rep;
  rep.n = n;
  for (const Path& s : sides) rep.perimeter += static_cast<int>(s.size()) - 1;
  rep.factor = 1.0 + std::log2(static_cast<double>(n - 1));
  rep.bound_input = bound;
  rep.threshold = rep.factor * bound;
  for (int i = 0; i < n; ++i) {
    std::vector<int> others;
    for (int j = 0; j < n; ++j) {
      if (j != i) others.insert(others.end(), sides[static_cast<std::size_t>(j)].begin(),
                                sides[static_cast<std::size_t>(j)].end());
    }
    for (int p : sides[static_cast<std::size_t>(i)]) {
      int d = dist_to_set(b, dc, p, others);
      if (d > rep.worst_distance) {
        rep.worst_distance = d;
        rep.worst_side = i;
      }
    }
  }
  rep.pass = rep.worst_distance <= rep.threshold + 1e-12;
  return rep;
}

NgonReport ngon_neighborhood_check(const Ball& b, const std::vector<Path>& sides,
                                   const HyperbolicityProfile& profile) {
  int perimeter = 0;
  for (const Path& s : sides) perimeter += static_cast<int>(s.size()) - 1;
  bool clamped = false;
  double bound = profile.value_at(perimeter, &clamped);
  NgonReport rep = ngon_neighborhood_check(b, sides, bound);
  rep.bound_clamped = clamped;
  return rep;
}

SublinearityReport sublinearity_report(const HyperbolicityProfile& p) {
  SublinearityReport rep;
  if (p.samples.empty()) {
    rep.insufficient_data = true;
    return rep;
  }
  std::vector<SublinearityRow> rows;
  for (const ProfileSample& s : p.samples) {
    if (s.t == 0) continue;
    SublinearityRow row;
    row.t = s.t;
    row.f = s.f;
    row.ratio = s.f / s.t;
    rows.push_back(row);
  }
  if (rows.empty()) {
    rep.insufficient_data = true;
    return rep;
  }
  double running = std::numeric_limits<double>::infinity();
  for (auto& row : rows) {
    running = std::min(running, row.ratio);
    row.running_min = running;
  }
  double tail = std::numeric_limits<double>::infinity();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    tail = std::min(tail, it->ratio);
    it->tail_min = tail;
  }
  rep.rows = std::move(rows);
  return rep;
}

SyncReport synchronized_report(const std::vector<HyperbolicityProfile>& profiles,
                               const std::vector<int>& scales, double tolerance,
                               const HyperbolicityProfile* product_profile) {
  SyncReport rep;
  rep.tolerance = tolerance;
  rep.min_ratio_sum = std::numeric_limits<double>::infinity();
  for (int t : scales) {
    if (t <= 0) throw std::invalid_argument("scales must be positive");
    SyncScaleRow row{t, 0};
    for (const auto& p : profiles) {
      if (!p.covers(t)) throw GuardViolation("scale not covered by a profile");
      row.ratio_sum += p.value_at(t) / t;
    }
    rep.min_ratio_sum = std::min(rep.min_ratio_sum, row.ratio_sum);
    rep.rows.push_back(row);
  }
  rep.pass_at_scales = rep.min_ratio_sum <= tolerance;

  if (product_profile != nullptr) {
    rep.sandwich_checked = true;
    rep.lower_ok = true;
    rep.upper_ok = true;
    int t_common = product_profile->t_max();
    for (const auto& p : profiles) t_common = std::min(t_common, p.t_max());
    for (int t = 0; t <= t_common; ++t) {
      double fmax = 0;
      for (const auto& p : profiles) {
        double fi = p.value_at(t);
        fmax = std::max(fmax, fi);
        if (fi > product_profile->value_at(t) + 1e-12) rep.lower_ok = false;
      }
      if (product_profile->value_at(t) > fmax + 1e-12) rep.upper_ok = false;
    }
  }
  return rep;
}

double four_point_delta(const Ball& b, long long sample_cap) {
  std::vector<int> candidates;
  bool exact_anywhere = b.has_exact_metric() || b.complete();
  for (int id = 0; id < b.size(); ++id) {
    if (exact_anywhere || 2 * b.depth(id) <= b.radius()) candidates.push_back(id);
  }
  const long long n = static_cast<long long>(candidates.size());
  DistCache dc(b);
  auto value = [&](int w, int x, int y, int z) {
    long long s1 = dc(w, x) + dc(y, z);
    long long s2 = dc(w, y) + dc(x, z);
    long long s3 = dc(w, z) + dc(x, y);
    long long hi = std::max({s1, s2, s3});
    long long mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
    return (hi - mid) / 2.0;
  };
  double best = 0;
  if (n * n * n * n <= sample_cap) {
    for (long long i = 0; i < n; ++i)
      for (long long j = i; j < n; ++j)
        for (long long k = j; k < n; ++k)
          for (long long l = k; l < n; ++l)
            best = std::max(best, value(candidates[static_cast<std::size_t>(i)],
                                        candidates[static_cast<std::size_t>(j)],
                                        candidates[static_cast<std::size_t>(k)],
                                        candidates[static_cast<std::size_t>(l)]));
  } else {
    // Deterministic sample (splitmix64, fixed seed).
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&state]() {
      state += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = state;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    };
    for (long long s = 0; s < sample_cap; ++s) {
      int w = candidates[static_cast<std::size_t>(next() % static_cast<std::uint64_t>(n))];
      int x = candidates[static_cast<std::size_t>(next() % static_cast<std::uint64_t>(n))];
      int y = candidates[static_cast<std::size_t>(next() % static_cast<std::uint64_t>(n))];
      int z = candidates[static_cast<std::size_t>(next() % static_cast<std::uint64_t>(n))];
      best = std::max(best, value(w, x, y, z));
    }
  }
  return best;
}

}  // namespace ggt
