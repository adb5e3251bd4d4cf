#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "gasket/enumerate.hpp"
#include "gasket/io.hpp"
#include "oracles.hpp"

using namespace gasket;

namespace {

const GasketSpec kReference = GasketSpec::from_pi_multiples(1.8 / 3.0, 3.7 / 3.0);

std::multiset<long long> curvature_keys(const CircleSet& set) {
  std::multiset<long long> keys;
  for (const Circle& c : set.circles) keys.insert(std::llround(c.k * 1e6));
  return keys;
}

}  // namespace

TEST_CASE("tiny bounds reproduce hand counts") {
  const GasketSpec right = GasketSpec::from_pi_multiples(0.5, 1.0);
  const CircleSet five = enumerate_circles(right, 3.5);
  CHECK(five.count() == 5);
  CHECK(curvature_keys(five) ==
        std::multiset<long long>{-1000000, 2000000, 2000000, 3000000, 3000000});

  const GasketSpec sym = GasketSpec::from_pi_multiples(2.0 / 3.0, 4.0 / 3.0);
  CHECK(enumerate_circles(sym, 2.2).count() == 4);
  CHECK(enumerate_circles(sym, 2.2, {false, Validation::sampled}).count() == 3);
  // below the smallest inner curvature only the bounding circle survives
  CHECK(enumerate_circles(sym, 2.0).count() == 1);
  CHECK(enumerate_circles(sym, 2.0, {false, Validation::sampled}).count() == 0);
}

TEST_CASE("reference gasket counts are stable") {
  CHECK(enumerate_circles(kReference, 100.0).count() == 168);
  CHECK(enumerate_circles(kReference, 200.0).count() == 406);
  CHECK(enumerate_circles(kReference, 400.0).count() == 1006);
  CHECK(enumerate_circles(kReference, 800.0).count() == 2504);
}

TEST_CASE("include_bounding toggles exactly one circle") {
  const CircleSet with = enumerate_circles(kReference, 100.0);
  const CircleSet without = enumerate_circles(kReference, 100.0, {false, Validation::sampled});
  CHECK(with.count() == without.count() + 1);
  CHECK(with.circles.front().k == -1.0);  // canonical order puts it first
  for (const Circle& c : without.circles) CHECK(c.k > 0.0);
}

TEST_CASE("canonical order and no duplicates") {
  const CircleSet set = enumerate_circles(kReference, 200.0);
  std::set<std::array<long long, 3>> keys;
  for (std::size_t i = 0; i < set.circles.size(); ++i) {
    const Circle& c = set.circles[i];
    if (i > 0) {
      const Circle& p = set.circles[i - 1];
      const bool ordered =
          p.k < c.k ||
          (p.k == c.k && (p.center().real() < c.center().real() ||
                          (p.center().real() == c.center().real() &&
                           p.center().imag() <= c.center().imag())));
      CHECK(ordered);
    }
    keys.insert({std::llround(c.k * 1e6), std::llround(c.m.real() * 1e6),
                 std::llround(c.m.imag() * 1e6)});
  }
  CHECK(keys.size() == set.count());
}

TEST_CASE("geometry invariants: containment and disjoint interiors") {
  const CircleSet set = enumerate_circles(kReference, 100.0, {false, Validation::sampled});
  for (const Circle& c : set.circles)
    CHECK(std::abs(c.center()) + c.radius() <= 1.0 + 1e-9);
  for (std::size_t i = 0; i < set.count(); ++i)
    for (std::size_t j = i + 1; j < set.count(); ++j) {
      const Circle &a = set.circles[i], &b = set.circles[j];
      const double d = point_distance(a.center(), b.center());
      CHECK(d >= a.radius() + b.radius() - 1e-9);
    }
}

TEST_CASE("growing the bound only adds circles") {
  const CircleSet small = enumerate_circles(kReference, 100.0);
  const CircleSet large = enumerate_circles(kReference, 200.0);
  // canonical order in both: every small circle must appear in large
  std::size_t j = 0;
  for (const Circle& c : small.circles) {
    bool found = false;
    while (j < large.circles.size()) {
      const Circle& d = large.circles[j];
      if (std::abs(d.k - c.k) <= 1e-9 * std::max(1.0, std::abs(c.k)) &&
          std::abs(d.m - c.m) <= 1e-9 * std::max(1.0, std::abs(c.m))) {
        found = true;
        ++j;
        break;
      }
      ++j;
    }
    CHECK(found);
  }
}

TEST_CASE("agreement with the breadth-first oracle") {
  const std::array<GasketSpec, 3> specs = {
      kReference,
      GasketSpec::from_pi_multiples(0.5, 1.0),
      GasketSpec::from_pi_multiples(2.9 / 3.0, 3.2 / 3.0),
  };
  for (const GasketSpec& spec : specs) {
    const CircleSet dfs = enumerate_circles(spec, 50.0);
    const CircleSet bfs = oracle::bfs_enumerate(spec, 50.0);
    REQUIRE(dfs.count() == bfs.count());
    for (std::size_t i = 0; i < dfs.count(); ++i) {
      const Circle &a = dfs.circles[i], &b = bfs.circles[i];
      CHECK(std::abs(a.k - b.k) <= 1e-9 * std::max(1.0, std::abs(a.k)));
      CHECK(std::abs(a.m - b.m) <= 1e-9 * std::max(1.0, std::abs(a.m)));
    }
  }
}

TEST_CASE("validation stats reflect the sampling policy") {
  const CircleSet all = enumerate_circles(kReference, 50.0);  // sampled, small T: every quadruple
  CHECK(all.validation.quadruples > 0);
  CHECK(all.validation.checked == all.validation.quadruples);
  CHECK(all.validation.max_curvature_rel <= kDescartesTol);
  CHECK(all.validation.max_center_rel <= kDescartesTol);
  CHECK(all.validation.max_tangency <= kTangencyTol);

  const CircleSet none =
      enumerate_circles(kReference, 50.0, {true, Validation::none});
  CHECK(none.validation.checked == 0);
  CHECK(none.count() == all.count());

  const CircleSet sampled =
      enumerate_circles(kReference, 400.0, {true, Validation::sampled});
  const CircleSet full = enumerate_circles(kReference, 400.0, {true, Validation::full});
  CHECK(sampled.validation.checked < sampled.validation.quadruples);
  CHECK(sampled.validation.checked > 0);
  CHECK(full.validation.checked == full.validation.quadruples);
  CHECK(full.count() == sampled.count());
}

TEST_CASE("count ratio freezes the normalization") {
  const GasketSpec sym = GasketSpec::from_pi_multiples(2.0 / 3.0, 4.0 / 3.0);
  const CountRatio r = count_ratio(enumerate_circles(sym, 2.2));
  CHECK(r.count == 4);
  // 4 / 2.2^1.305688
  CHECK(r.ratio == doctest::Approx(1.4287715900811035).epsilon(1e-9));

  CircleSet empty;
  empty.T = 2.0;
  CHECK_THROWS_AS(count_ratio(empty), std::invalid_argument);
}

TEST_CASE("circle CSV uses the canonical order") {
  const CircleSet set = enumerate_circles(kReference, 100.0);
  const std::string csv = circles_to_csv(set);
  const auto rows = parse_csv_text(csv);
  REQUIRE(rows.size() == set.count() + 1);
  CHECK(rows[0] == std::vector<std::string>{"k", "re", "im", "r"});
  CHECK(rows[1] == std::vector<std::string>{"-1", "0", "0", "1"});
  // spot check a row round-trips numerically
  const Circle& c = set.circles[5];
  CHECK(parse_double(rows[6][0]) == doctest::Approx(c.k).epsilon(1e-12));
  CHECK(parse_double(rows[6][3]) == doctest::Approx(c.radius()).epsilon(1e-12));
}
