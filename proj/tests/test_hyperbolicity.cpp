#include <doctest.h>

#include <array>
#include <cmath>

#include "ggt/coset_graph.hpp"
#include "ggt/hyperbolicity.hpp"

using namespace ggt;

namespace {

Presentation pres(const std::string& gens, const std::vector<std::string>& rels) {
  return make_presentation(gens, rels);
}

Word W(const OrderedAlphabet& a, const std::string& s) { return parse_word(a, s); }

Ball f2_ball(int r) {
  return build_ball(make_free_oracle(OrderedAlphabet(std::vector<char>{'a', 'b'})), r);
}

Ball z2_ball(int r) { return build_ball(make_abelian_oracle(pres("a b", {"abAB"})), r); }

Path first_geodesic(const Ball& b, int x, int y) {
  return enumerate_geodesics(b, x, y, 1000).front();
}

// The staircase triangle e, (k,0), (0,k) with the long side through (k,k).
std::array<Path, 3> staircase_triangle(const Ball& b, int k) {
  const auto& a = b.oracle().alphabet();
  int x = b.locate(power(W(a, "a"), k));
  int y = b.locate(power(W(a, "b"), k));
  Path side1 = first_geodesic(b, 0, x);
  Path side3 = first_geodesic(b, y, 0);
  Path side2{x};
  Word cur = power(W(a, "a"), k);
  for (int i = 0; i < k; ++i) {
    cur = mul(cur, W(a, "b"));
    side2.push_back(b.locate(cur));
  }
  for (int i = 0; i < k; ++i) {
    cur = mul(cur, W(a, "A"));
    side2.push_back(b.locate(cur));
  }
  return {side1, side2, side3};
}

}  // namespace

TEST_CASE("tree comparison arm lengths") {
  auto b = z2_ball(6);
  const auto& a = b.oracle().alphabet();
  int x = 0, y = b.locate(W(a, "aa")), z = b.locate(W(a, "bb"));
  auto tc = tree_comparison(b, x, y, z);
  CHECK(tc.a + tc.b == doctest::Approx(b.distance(x, y)));
  CHECK(tc.a + tc.c == doctest::Approx(b.distance(x, z)));
  CHECK(tc.b + tc.c == doctest::Approx(b.distance(y, z)));
  CHECK(tc.a >= 0);
  CHECK(tc.b >= 0);
  CHECK(tc.c >= 0);
}

TEST_CASE("slimness") {
  SUBCASE("tree triangles are 0-slim") {
    auto b = f2_ball(4);
    const auto& a = b.oracle().alphabet();
    int y = b.locate(W(a, "ab")), z = b.locate(W(a, "aB"));
    std::array<Path, 3> sides{first_geodesic(b, 0, y), first_geodesic(b, y, z),
                              first_geodesic(b, z, 0)};
    CHECK(slimness(b, sides) == doctest::Approx(0));
  }
  SUBCASE("Z^2 staircase triangle is 2-slim at k=2") {
    auto b = z2_ball(8);
    auto sides = staircase_triangle(b, 2);
    CHECK(slimness(b, sides) == doctest::Approx(2));
  }
  SUBCASE("degenerate triangle") {
    auto b = f2_ball(2);
    std::array<Path, 3> sides{Path{0}, Path{0}, Path{0}};
    CHECK(slimness(b, sides) == doctest::Approx(0));
  }
  SUBCASE("non-geodesic side rejected") {
    auto b = f2_ball(4);
    const auto& a = b.oracle().alphabet();
    // Walk out and back: not geodesic.
    Path bad{0, b.locate(W(a, "a")), 0};
    std::array<Path, 3> sides{bad, Path{0}, Path{0}};
    CHECK_THROWS(slimness(b, sides));
  }
}

TEST_CASE("thinness and insize") {
  SUBCASE("tree tripod") {
    auto b = f2_ball(4);
    const auto& a = b.oracle().alphabet();
    int y = b.locate(W(a, "a")), z = b.locate(W(a, "ab"));
    std::array<Path, 3> sides{first_geodesic(b, 0, y), first_geodesic(b, y, z),
                              first_geodesic(b, z, 0)};
    auto [thin, insize] = thinness_and_insize(b, sides);
    CHECK(thin == doctest::Approx(0));
    CHECK(insize == doctest::Approx(0));
  }
  SUBCASE("Z^2 staircase matched pair") {
    auto b = z2_ball(8);
    auto sides = staircase_triangle(b, 2);
    auto [thin, insize] = thinness_and_insize(b, sides);
    CHECK(thin >= 2);
    CHECK(slimness(b, sides) <= thin);  // slim implied by thin
    (void)insize;
  }
}

TEST_CASE("hyperbolicity function") {
  SUBCASE("free group is flat") {
    auto b = f2_ball(8);
    auto p = hyperbolicity_function(b, 8, ProfileMode::Exact);
    REQUIRE(p.samples.size() == 9);
    for (const auto& s : p.samples) CHECK(s.f == doctest::Approx(0));
    CHECK(p.mode == ProfileMode::Exact);
    CHECK(p.cert == Certificate::Certified);
  }
  SUBCASE("Z^2 linear witnesses") {
    auto b = z2_ball(8);
    auto p = hyperbolicity_function(b, 8, ProfileMode::Exact);
    CHECK(p.value_at(4) >= 1);
    CHECK(p.value_at(8) >= 2);
    // Non-decreasing in t.
    for (std::size_t i = 1; i < p.samples.size(); ++i) {
      CHECK(p.samples[i].f >= p.samples[i - 1].f);
      CHECK(p.samples[i].triangles >= p.samples[i - 1].triangles);
    }
  }
  SUBCASE("6-cycle exact value") {
    auto b = build_ball(make_finite_table_oracle(pres("a", {"aaaaaa"}), 8), 6);
    auto p = hyperbolicity_function(b, 6, ProfileMode::Exact);
    CHECK(p.value_at(6) == doctest::Approx(1));
  }
  SUBCASE("interval mode is a lower bound of exact") {
    auto b = z2_ball(6);
    auto lo = hyperbolicity_function(b, 6, ProfileMode::IntervalLower);
    auto hi = hyperbolicity_function(b, 6, ProfileMode::Exact);
    for (int t = 0; t <= 6; ++t) CHECK(lo.value_at(t) <= hi.value_at(t));
    CHECK(lo.mode == ProfileMode::IntervalLower);
  }
  SUBCASE("radius guard") {
    auto b = f2_ball(2);
    CHECK_THROWS(hyperbolicity_function(b, 8, ProfileMode::Exact));
  }
  SUBCASE("clamping flags out-of-range scales") {
    auto b = f2_ball(4);
    auto p = hyperbolicity_function(b, 4, ProfileMode::Exact);
    bool clamped = false;
    CHECK(p.value_at(10, &clamped) == doctest::Approx(p.samples.back().f));
    CHECK(clamped);
    CHECK(!p.covers(10));
  }
}

TEST_CASE("ngon neighborhood check") {
  SUBCASE("tree 4-gon with bound 0") {
    auto b = f2_ball(6);
    const auto& a = b.oracle().alphabet();
    int p1 = b.locate(W(a, "a")), p2 = b.locate(W(a, "ab")), p3 = b.locate(W(a, "b"));
    std::vector<Path> sides{first_geodesic(b, 0, p1), first_geodesic(b, p1, p2),
                            first_geodesic(b, p2, p3), first_geodesic(b, p3, 0)};
    auto rep = ngon_neighborhood_check(b, sides, 0.0);
    CHECK(rep.n == 4);
    CHECK(rep.factor == doctest::Approx(1 + std::log2(3)));
    CHECK(rep.pass);
    CHECK(rep.worst_distance == doctest::Approx(0));
  }
  SUBCASE("triangle case uses factor 2") {
    auto b = z2_ball(8);
    auto tri = staircase_triangle(b, 2);
    std::vector<Path> sides(tri.begin(), tri.end());
    auto p = hyperbolicity_function(b, 8, ProfileMode::Exact);
    auto rep = ngon_neighborhood_check(b, sides, p);
    CHECK(rep.factor == doctest::Approx(2));  // 1 + log2(2)
    CHECK(rep.perimeter == 8);
    CHECK(rep.pass);  // slimness 2 <= 2 * f(8)
  }
  SUBCASE("open polygon rejected") {
    auto b = f2_ball(4);
    const auto& a = b.oracle().alphabet();
    std::vector<Path> sides{first_geodesic(b, 0, b.locate(W(a, "a"))),
                            first_geodesic(b, b.locate(W(a, "a")), b.locate(W(a, "ab"))),
                            first_geodesic(b, b.locate(W(a, "b")), 0)};
    CHECK_THROWS(ngon_neighborhood_check(b, sides, 0.0));
  }
}

TEST_CASE("sublinearity report") {
  SUBCASE("free group ratios are all zero") {
    auto b = f2_ball(6);
    auto rep = sublinearity_report(hyperbolicity_function(b, 6, ProfileMode::Exact));
    CHECK(!rep.insufficient_data);
    for (const auto& row : rep.rows) {
      CHECK(row.ratio == doctest::Approx(0));
      CHECK(row.running_min == doctest::Approx(0));
      CHECK(row.tail_min == doctest::Approx(0));
    }
  }
  SUBCASE("Z^2 ratios bounded below at witnessed scales") {
    auto b = z2_ball(8);
    auto rep = sublinearity_report(hyperbolicity_function(b, 8, ProfileMode::Exact));
    for (const auto& row : rep.rows) {
      if (row.t == 4 || row.t == 8) CHECK(row.ratio >= 0.25);
    }
  }
}

TEST_CASE("synchronized report") {
  SUBCASE("two flat profiles pass") {
    auto b = f2_ball(6);
    auto p = hyperbolicity_function(b, 6, ProfileMode::Exact);
    auto rep = synchronized_report({p, p}, {2, 4, 6}, 0.01);
    CHECK(rep.pass_at_scales);
    CHECK(rep.min_ratio_sum == doctest::Approx(0));
  }
  SUBCASE("Z^2 with itself fails at scales") {
    auto b = z2_ball(8);
    auto p = hyperbolicity_function(b, 8, ProfileMode::Exact);
    auto rep = synchronized_report({p, p}, {4, 8}, 0.01);
    CHECK(!rep.pass_at_scales);
    CHECK(rep.min_ratio_sum >= 0.5);
  }
  SUBCASE("free product sandwich at small scale") {
    auto z4 = make_finite_table_oracle(pres("a", {"aaaa"}), 6);
    auto z6 = make_finite_table_oracle(pres("a", {"aaaaaa"}), 8);
    auto prod = make_free_product_oracle({z4, z6});
    auto p4 = hyperbolicity_function(build_ball(z4, 6), 6, ProfileMode::Exact);
    auto p6 = hyperbolicity_function(build_ball(z6, 6), 6, ProfileMode::Exact);
    auto pp = hyperbolicity_function(build_ball(prod, 6), 6, ProfileMode::Exact);
    auto rep = synchronized_report({p4, p6}, {2, 4, 6}, 0.5, &pp);
    CHECK(rep.sandwich_checked);
    CHECK(rep.lower_ok);
    CHECK(rep.upper_ok);
    for (int t = 0; t <= 6; ++t) {
      CHECK(pp.value_at(t) == doctest::Approx(std::max(p4.value_at(t), p6.value_at(t))));
    }
  }
  SUBCASE("uncovered scale rejected") {
    auto b = f2_ball(4);
    auto p = hyperbolicity_function(b, 4, ProfileMode::Exact);
    CHECK_THROWS(synchronized_report({p}, {10}, 0.01));
  }
}

TEST_CASE("four point delta") {
  auto f2 = f2_ball(3);
  CHECK(four_point_delta(f2, 100'000'000) == doctest::Approx(0));
  auto cyc = build_ball(make_finite_table_oracle(pres("a", {"aaaaaa"}), 8), 6);
  CHECK(four_point_delta(cyc, 100'000'000) == doctest::Approx(1));  // exhaustive: 6^4 quadruples
  auto z2 = z2_ball(4);
  CHECK(four_point_delta(z2, 100'000'000) >= 2);
  // Sampled estimate never exceeds the exhaustive one.
  CHECK(four_point_delta(cyc, 100) <= 1.0 + 1e-12);
}
