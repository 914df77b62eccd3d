#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "apollo/lorentz.hpp"
#include "apollo/vec.hpp"

using namespace apollo;

namespace {

// Deterministic small-integer vectors for property checks.
Vec random_vec(int rho, uint64_t& state) {
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  Vec v(rho);
  for (int i = 0; i < rho; ++i) v[i] = (long)(next() % 41) - 20;
  return v;
}

}  // namespace

TEST_CASE("form values on the basis") {
  int rho = 4;
  CHECK(dot(unit(rho, 0), unit(rho, 0)) == 1);
  CHECK(dot(unit(rho, 0), unit(rho, 1)) == -1);
  // D (.) D = rho*(2-rho)
  CHECK(dot(all_ones(4), all_ones(4)) == -8);
  CHECK(dot(all_ones(10), all_ones(10)) == -80);
}

TEST_CASE("closed form agrees with the explicit matrix") {
  for (int rho : {4, 7, 10}) {
    BilinearForm J(rho);
    uint64_t st = 12345 + rho;
    for (int t = 0; t < 50; ++t) {
      Vec u = random_vec(rho, st), v = random_vec(rho, st);
      CHECK(dot(u, v) == J.apply(u, v));
      CHECK(dot(u, v) == dot(v, u));
    }
    CHECK(J.inverse_check());
  }
}

TEST_CASE("e_k functional identity") {
  uint64_t st = 99;
  for (int rho : {5, 9}) {
    for (int t = 0; t < 20; ++t) {
      Vec x = random_vec(rho, st);
      for (int k = 0; k < rho; ++k) CHECK(dot(unit(rho, k), x) == 2 * x[k] - sum(x));
    }
  }
}

TEST_CASE("u = e1 - e_{rho-2} + E has self-product 4 and even products") {
  for (int rho = 4; rho <= 10; ++rho) {
    Vec E = add(unit(rho, rho - 2), unit(rho, rho - 1));
    Vec u = add(sub(unit(rho, 0), unit(rho, rho - 3)), E);
    CHECK(dot(u, u) == 4);
    uint64_t st = 7 * rho;
    for (int t = 0; t < 20; ++t) {
      Vec x = random_vec(rho, st);
      Int ux = dot(u, x);
      CHECK(ux == 2 * x[0] - 2 * x[rho - 3] + 2 * x[rho - 2] + 2 * x[rho - 1] - 2 * sum(x));
      CHECK(ux % 2 == 0);
    }
  }
}

TEST_CASE("reflection examples") {
  // s2 sends e2 to the fifth circle of the root cluster.
  Vec s2 = parse_vec("1,-1,1,1");
  RVec image = reflect(s2, unit(4, 1));
  CHECK(is_integral(image));
  Vec im = clear_denominators(image);
  CHECK(im == parse_vec("2,-1,2,2"));
  CHECK(dot(im, im) == 1);

  // Reflecting the mirror vector negates it.
  RVec neg = reflect(s2, s2);
  CHECK(clear_denominators(neg) == parse_vec("-1,1,-1,-1"));

  // v45 swaps the fourth and fifth coordinates.
  Vec v45 = sub(unit(5, 3), unit(5, 4));
  CHECK(clear_denominators(reflect(v45, unit(5, 3))) == unit(5, 4));

  CHECK_THROWS_AS(reflect(parse_vec("0,0,1,1"), unit(4, 0)), Error);  // isotropic mirror
}

TEST_CASE("reflections and phi maps preserve the form") {
  uint64_t st = 4242;
  for (int rho : {4, 9}) {
    Vec E = add(unit(rho, rho - 2), unit(rho, rho - 1));
    Vec u = add(sub(unit(rho, 0), unit(rho, rho - 3)), E);
    for (int t = 0; t < 25; ++t) {
      Vec x = random_vec(rho, st), y = random_vec(rho, st);
      RVec rx = reflect(u, x), ry = reflect(u, y);
      CHECK(dot(rx, ry) == Rat(dot(x, y)));
      // Twice is the identity.
      RVec rrx = reflect(u, rx);
      for (int i = 0; i < rho; ++i) CHECK(rrx[i] == Rat(x[i]));
    }
  }
  // phi fixes its two centers and preserves the form.
  Vec P1 = parse_vec("1,1,1,1,0,-1,-1,1,1");
  Vec E9 = add(unit(9, 7), unit(9, 8));
  CHECK(clear_denominators(phi_map(P1, E9, P1)) == P1);
  CHECK(canonical_ray(clear_denominators(phi_map(P1, E9, E9))) == canonical_ray(E9));
  for (int t = 0; t < 25; ++t) {
    Vec x = random_vec(9, st), y = random_vec(9, st);
    CHECK(dot(phi_map(P1, E9, x), phi_map(P1, E9, y)) == Rat(dot(x, y)));
  }
}

TEST_CASE("curvature") {
  Vec E9 = add(unit(9, 7), unit(9, 8));
  CHECK(curvature(unit(9, 8), E9) == 0);
  Vec E4 = parse_vec("0,0,1,1");
  CHECK(curvature(unit(4, 0), E4) == 2);
  CHECK(curvature(parse_vec("2,-1,2,2"), E4) == 2);
  // Non-square self-product is refused; the squared form is total.
  Vec v12 = parse_vec("1,-1,0,0,0");
  Vec E5 = parse_vec("0,0,0,1,1");
  CHECK(dot(v12, v12) == 4);
  CHECK(curvature(v12, E5) == 0);
  Vec w = parse_vec("1,1,0,-1,0");  // self-product 5, not a square
  CHECK(dot(w, w) == 5);
  CHECK_THROWS_AS(curvature(w, E5), Error);
  CHECK(curvature_squared(w, E5) == make_rat(dot(w, E5) * dot(w, E5), 5));
}

TEST_CASE("center") {
  Vec E4 = parse_vec("0,0,1,1");
  CHECK(center_ray(unit(4, 0), E4) == parse_vec("4,0,1,1"));
  Vec E5 = parse_vec("0,0,0,1,1");
  CHECK(center_ray(unit(5, 0), E5) == parse_vec("4,0,0,1,1"));
  Vec E9 = add(unit(9, 7), unit(9, 8));
  CHECK_THROWS_AS(center(unit(9, 8), E9), Error);  // curvature 0
}

TEST_CASE("euclidean distance") {
  Vec E5 = parse_vec("0,0,0,1,1");
  Vec A = parse_vec("1,0,0,0,1");
  Vec B = parse_vec("1,0,0,1,0");
  CHECK(euclid_dist2(A, A, E5) == 0);
  // Antipodal tangency points of the unit-curvature-2 sphere: distance = diameter.
  CHECK(euclid_dist2(A, B, E5) == 1);
  CHECK(euclid_dist2(A, B, E5) == euclid_dist2(B, A, E5));
  // Doubling E quarters the squared distance.
  CHECK(euclid_dist2(A, B, scaled(E5, 2)) == make_rat(1, 4));
}

TEST_CASE("midpoint") {
  Vec E9 = add(unit(9, 7), unit(9, 8));
  Vec Q4 = parse_vec("16,16,16,16,-12,-12,-12,19,19");
  Vec Q5 = parse_vec("12,12,12,12,12,-16,-16,15,15");
  Vec P1 = midpoint(Q4, Q5, E9);
  CHECK(P1 == parse_vec("1,1,1,1,0,-1,-1,1,1"));
  CHECK(dot(P1, P1) == 0);
  CHECK(euclid_dist2(P1, Q4, E9) == euclid_dist2(P1, Q5, E9));

  Vec E10 = add(unit(10, 8), unit(10, 9));
  Vec Q4t = parse_vec("10,10,10,10,-6,-6,-6,-6,13,13");
  Vec Q6t = parse_vec("6,6,6,6,6,6,-10,-10,9,9");
  CHECK(midpoint(Q4t, Q6t, E10) == parse_vec("1,1,1,1,0,0,-1,-1,1,1"));
}
