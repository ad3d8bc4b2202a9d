#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ggt/ball.hpp"

namespace ggt {

enum class ProfileMode { Exact, IntervalLower };

const char* to_string(ProfileMode m);

using Path = std::vector<int>;  // vertex ids; k+1 vertices for a length-k path

struct TriangleMeasure {
  std::array<int, 3> vertices;
  double delta_slim = 0;
  double delta_thin = 0;
  double insize = 0;
  int perimeter = 0;
};

// Tripod comparison data: arm lengths from Gromov products.
struct TreeComparison {
  double a = 0, b = 0, c = 0;  // d(x,y)=a+b, d(x,z)=a+c, d(y,z)=b+c
};

TreeComparison tree_comparison(const Ball& b, int x, int y, int z);

// Sides are geodesic paths forming a triangle; throws on non-geodesic input.
double slimness(const Ball& b, const std::array<Path, 3>& sides);
// (delta_thin, insize); matching at integer arc-lengths up to the floor of
// the Gromov products.
std::pair<double, double> thinness_and_insize(const Ball& b, const std::array<Path, 3>& sides);

struct ProfileSample {
  int t;
  double f;
  ProfileMode mode;
  long long triangles;  // triangles of perimeter <= t
};

struct HyperbolicityProfile {
  std::vector<ProfileSample> samples;  // one per integer t in [0, t_max]
  int ball_radius = 0;
  ProfileMode mode = ProfileMode::Exact;
  Certificate cert = Certificate::Certified;

  int t_max() const { return samples.empty() ? -1 : samples.back().t; }
  // f at scale t; clamps to the last sample when t exceeds coverage (the
  // clamped value is a lower bound of the true f(t)).
  double value_at(int t, bool* clamped = nullptr) const;
  bool covers(int t) const { return t <= t_max(); }
};

// f(t) = sup of slimness over geodesic triangles of perimeter <= t with one
// vertex pinned at the identity (exact for vertex-transitive graphs).
// Requires b.radius >= t_max. Exact mode enumerates all geodesic side
// choices (throws CapExceeded past geodesic_cap); interval mode yields a
// certified lower bound.
HyperbolicityProfile hyperbolicity_function(const Ball& b, int t_max, ProfileMode mode,
                                            int geodesic_cap = 100000);

struct NgonReport {
  int n = 0;
  int perimeter = 0;
  double factor = 0;       // 1 + log2(n-1)
  double bound_input = 0;  // f(|T_n|) or supplied delta
  double threshold = 0;    // factor * bound_input
  double worst_distance = 0;
  int worst_side = -1;
  bool bound_clamped = false;
  bool pass = false;
};

// Each side must lie within (1+log2(n-1)) * bound of the union of the other
// sides. Polygon must be closed, 3 <= n <= 12, all sides geodesic.
NgonReport ngon_neighborhood_check(const Ball& b, const std::vector<Path>& sides, double bound);
NgonReport ngon_neighborhood_check(const Ball& b, const std::vector<Path>& sides,
                                   const HyperbolicityProfile& profile);

struct SublinearityRow {
  int t;
  double f;
  double ratio;        // f(t)/t
  double running_min;  // min ratio over [1, t]
  double tail_min;     // min ratio over [t, t_max] (liminf proxy for cut t0=t)
};

struct SublinearityReport {
  std::vector<SublinearityRow> rows;
  bool insufficient_data = false;
  // Always finite-scale evidence, never a hyperbolicity certificate.
};

SublinearityReport sublinearity_report(const HyperbolicityProfile& p);

struct SyncScaleRow {
  int t;
  double ratio_sum;  // sum_i f_i(t)/t
};

struct SyncReport {
  std::vector<SyncScaleRow> rows;
  double min_ratio_sum = 0;
  double tolerance = 0;
  bool pass_at_scales = false;
  // Thm 3.12 proof inequalities, evaluated when a product profile is given.
  bool sandwich_checked = false;
  bool lower_ok = false;  // f_i(t) <= f_product(t) for all i, t
  bool upper_ok = false;  // f_product(t) <= max_i f_i(t) for all t
};

SyncReport synchronized_report(const std::vector<HyperbolicityProfile>& profiles,
                               const std::vector<int>& scales, double tolerance,
                               const HyperbolicityProfile* product_profile = nullptr);

// Gromov four-point estimate: max over quadruples of (largest - middle)/2 of
// the three pairwise-sum pairings. Exhaustive when |candidates|^4 <=
// sample_cap, otherwise deterministically sampled.
double four_point_delta(const Ball& b, long long sample_cap);

}  // namespace ggt
