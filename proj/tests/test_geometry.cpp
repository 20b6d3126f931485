#include <doctest.h>

#include "clearbound/geometry.hpp"
#include "support.hpp"

using namespace clearbound;
using namespace clearbound::testing;

namespace {

State make_state(std::initializer_list<double> coords) {
  State x(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) x[i++] = c;
  return x;
}

HalfSpace half_space_x1_leq(double offset) {
  return HalfSpace{make_state({1.0, 0.0}), offset};
}

}  // namespace

TEST_CASE("clearance closed forms") {
  SUBCASE("single half-space") {
    World world(2, {half_space_x1_leq(0.0)});
    CHECK(world.clearance(make_state({1.0, 0.0})) == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("hypersphere") {
    World world(2, {Hypersphere{make_state({0.0, 0.0}), 1.0}});
    CHECK(world.clearance(make_state({3.0, 0.0})) == doctest::Approx(2.0).epsilon(1e-15));
  }
  SUBCASE("minimum over obstacles") {
    World world(2, {half_space_x1_leq(0.0), Hypersphere{make_state({4.0, 0.0}), 1.0}});
    const State x = make_state({2.0, 0.0});
    CHECK(world.clearance(x) == doctest::Approx(1.0).epsilon(1e-15));
    // Rejection-sampled invalid states can only tighten from above.
    Rng rng(17);
    double sampled = kInf;
    for (int i = 0; i < 200000; ++i) {
      State p(2);
      p[0] = rng.uniform(-2.0, 6.0);
      p[1] = rng.uniform(-4.0, 4.0);
      if (world.clearance(p) == 0.0) sampled = std::min(sampled, (p - x).norm());
    }
    CHECK(world.clearance(x) <= sampled);
    CHECK(sampled == doctest::Approx(1.0).epsilon(1e-2));
  }
  SUBCASE("box from outside and inside") {
    World world(2, {AxisAlignedBox{make_state({0.0, 0.0}), make_state({1.0, 1.0})}});
    CHECK(world.clearance(make_state({2.0, 0.5})) == doctest::Approx(1.0));
    CHECK(world.clearance(make_state({2.0, 2.0})) == doctest::Approx(std::sqrt(2.0)));
    CHECK(world.clearance(make_state({0.5, 0.5})) == 0.0);
  }
}

TEST_CASE("validity") {
  SUBCASE("half-space invalid side") {
    World world(2, {half_space_x1_leq(0.0)});
    CHECK_FALSE(world.is_valid(make_state({-1.0, 0.0})));
    CHECK(world.is_valid(make_state({0.5, 0.0})));
  }
  SUBCASE("empty obstacle list") {
    World world(3, {});
    CHECK(world.clearance(make_state({4.0, 5.0, 6.0})) == kInf);
    CHECK(world.is_valid(make_state({4.0, 5.0, 6.0})));
  }
  SUBCASE("boundary counts as invalid") {
    World world(2, {Hypersphere{make_state({0.0, 0.0}), 1.0}});
    CHECK_FALSE(world.is_valid(make_state({1.0, 0.0})));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(World(2, {Hypersphere{make_state({0.0, 0.0}), -1.0}}), InputError);
  CHECK_THROWS_AS(World(2, {Hypersphere{make_state({0.0, 0.0}), 0.0}}), InputError);
  CHECK_THROWS_AS(World(2, {AxisAlignedBox{make_state({1.0, 0.0}), make_state({0.0, 1.0})}}),
                  InputError);
  CHECK_THROWS_AS(World(2, {HalfSpace{make_state({1.0, 1.0}), 0.0}}), InputError);
  CHECK_THROWS_AS(World(2, {Hypersphere{make_state({0.0, 0.0, 0.0}), 1.0}}), InputError);

  World world(2, {half_space_x1_leq(0.0)});
  CHECK_THROWS_AS(world.clearance(make_state({0.0, 0.0, 0.0})), InputError);
  CHECK_THROWS_AS(world.is_valid(make_state({0.0})), InputError);
}

TEST_CASE("bounds as obstacles") {
  const AxisAlignedBox bounds{make_state({0.0, 0.0}), make_state({1.0, 1.0})};
  World open_world(2, {}, bounds, false);
  World closed_world(2, {}, bounds, true);
  const State inside = make_state({0.25, 0.5});
  const State outside = make_state({1.5, 0.5});
  CHECK(open_world.clearance(inside) == kInf);
  CHECK(open_world.is_valid(outside));
  CHECK(closed_world.clearance(inside) == doctest::Approx(0.25));
  CHECK_FALSE(closed_world.is_valid(outside));
}

TEST_CASE("clearance is 1-Lipschitz") {
  Rng rng(101);
  for (int i = 0; i < 10000; ++i) {
    const int dim = rng.uniform_int(2, 3);
    const World world = random_world(rng, dim, 6);
    State a(dim), b(dim);
    for (int j = 0; j < dim; ++j) {
      a[j] = rng.uniform(-0.5, 1.5);
      b[j] = rng.uniform(-0.5, 1.5);
    }
    double da = world.clearance(a);
    double db = world.clearance(b);
    if (std::isinf(da) || std::isinf(db)) {
      CHECK(da == db);  // empty invalid set: both infinite
      continue;
    }
    CHECK(std::abs(da - db) <= (a - b).norm() + 1e-9);
  }
}

TEST_CASE("clearance is zero exactly on the invalid set") {
  Rng rng(202);
  for (int i = 0; i < 500; ++i) {
    const World world = random_world(rng, 2, 6);
    for (const auto& obstacle : world.obstacles()) {
      // One point inside each obstacle.
      State inside;
      if (const auto* sphere = std::get_if<Hypersphere>(&obstacle)) {
        inside = sphere->center;
      } else if (const auto* box = std::get_if<AxisAlignedBox>(&obstacle)) {
        inside = 0.5 * (box->min_corner + box->max_corner);
      } else {
        const auto& half = std::get<HalfSpace>(obstacle);
        inside = (half.offset - 1.0) * half.normal;
      }
      CHECK(world.clearance(inside) == 0.0);
      CHECK_FALSE(world.is_valid(inside));
    }
  }
}

TEST_CASE("adding an obstacle never increases clearance") {
  Rng rng(303);
  for (int i = 0; i < 2000; ++i) {
    const int dim = rng.uniform_int(2, 3);
    World world = random_world(rng, dim, 5);
    World larger = [&] {
      auto obstacles = world.obstacles();
      const World extra = random_world(rng, dim, 3);
      obstacles.insert(obstacles.end(), extra.obstacles().begin(), extra.obstacles().end());
      return World(dim, std::move(obstacles));
    }();
    State x(dim);
    for (int j = 0; j < dim; ++j) x[j] = rng.uniform(-0.5, 1.5);
    CHECK(larger.clearance(x) <= world.clearance(x));
  }
}

TEST_CASE("segment invalid-set intersection") {
  World world(2, {Hypersphere{make_state({0.5, 0.5}), 0.25}});
  CHECK(world.segment_hits_invalid(make_state({0.0, 0.5}), make_state({1.0, 0.5})));
  CHECK_FALSE(world.segment_hits_invalid(make_state({0.0, 0.0}), make_state({1.0, 0.0})));
  // Tangent contact counts: the invalid set is closed.
  CHECK(world.segment_hits_invalid(make_state({0.0, 0.25}), make_state({1.0, 0.25})));

  World boxed(2, {AxisAlignedBox{make_state({0.4, 0.4}), make_state({0.6, 0.6})}});
  CHECK(boxed.segment_hits_invalid(make_state({0.0, 0.5}), make_state({1.0, 0.5})));
  CHECK_FALSE(boxed.segment_hits_invalid(make_state({0.0, 0.3}), make_state({1.0, 0.3})));

  // Randomized agreement with dense sampling.
  Rng rng(404);
  for (int i = 0; i < 2000; ++i) {
    const World w = random_world(rng, 2, 4);
    State a(2), b(2);
    for (int j = 0; j < 2; ++j) {
      a[j] = rng.uniform(-0.3, 1.3);
      b[j] = rng.uniform(-0.3, 1.3);
    }
    if ((a - b).norm() < 1e-9) continue;
    bool sampled_hit = false;
    for (int k = 0; k <= 400; ++k) {
      const double s = static_cast<double>(k) / 400.0;
      if (w.clearance(a + s * (b - a)) == 0.0) {
        sampled_hit = true;
        break;
      }
    }
    if (sampled_hit) CHECK(w.segment_hits_invalid(a, b));
    if (!w.segment_hits_invalid(a, b)) CHECK_FALSE(sampled_hit);
  }
}
