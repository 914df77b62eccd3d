#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apollo/domain.hpp"
#include "apollo/isometry.hpp"

namespace apollo {

/**
 * Generators of the thin group: reflections through every reflection face
 * except the base face e_rho, plus the two point-reflection maps for
 * rho = 9, 10.  Every generator is an exact integral involution preserving
 * the form and the future cone.
 */
struct GeneratorSet {
  int rho = 0;
  std::vector<Isometry> gens;
  std::vector<std::string> labels;
  std::vector<Vec> mirrors;  // face vector tied to each generator (mirror, or
                             // the wall/dome sphere carrying a phi map)
  Vec strip_E;               // e_{rho-1} + e_rho
  Vec height_base;           // Q1 + 3E with Q1 the center of the sphere e_1
};

GeneratorSet build_group(int rho);

// h(m) = -(Q1 + 3E) (.) m; nonnegative on the sphere orbit.
Int height(const GeneratorSet& g, const Vec& m);
Int height(const Vec& m, int rho);

struct DescentResult {
  Vec terminal;
  std::vector<int> word;  // generator indices applied, in order
  size_t steps = 0;
};

/**
 * Greedy descent: repeatedly apply the generator that lexicographically
 * decreases (height, curvature, canonical vector); stop when none does.
 * The pure height is constant under reflections through walls containing
 * the base point, so the curvature and vector components break those ties,
 * keeping the walk strictly decreasing and deterministic.  On orbit members
 * the terminal has curvature 0.
 */
DescentResult descend(const GeneratorSet& g, const Vec& m, size_t step_cap = 1000000);

struct SphereRecord {
  Vec m;
  Int curvature;  // -m (.) E
  Int height;
  int word_length = 0;
};

struct EnumerateLimits {
  size_t record_cap = 400000;
  size_t visit_cap = 2000000;
  int max_rounds = 64;
};

struct EnumerateResult {
  std::vector<SphereRecord> records;  // sorted by (curvature, vector)
  Int height_bound = 0;               // final BFS window
  bool truncated = false;
  std::vector<Int> curvature_values;  // distinct values, ascending
};

/**
 * Breadth-first closure of {e_rho} under the generators, deduplicated by
 * exact vector, retaining records with 0 <= curvature <= kmax.  The frontier
 * is pruned by height <= H; H grows until two consecutive deepenings add no
 * new curvature value.  The retained window is the complete h-ball at the
 * final bound (the full orbit at fixed curvature is infinite, so the report
 * records the bound used).
 */
EnumerateResult enumerate_orbit(const GeneratorSet& g, const Vec& E, const Int& kmax,
                                const EnumerateLimits& lim = {});

struct PairViolation {
  size_t i = 0, j = 0;
  Int product;
};

struct PackingReport {
  size_t count = 0;
  size_t tangent_pairs = 0;
  bool separation_ok = false;   // every distinct pair has m (.) m' <= -1
  bool curvatures_ok = false;   // all curvatures nonnegative integers
  bool parity_ok = false;       // every m (.) e_rho is odd
  std::vector<PairViolation> violations;  // first few, deterministic order
  std::string to_json(const EnumerateResult& er, int rho, const Vec& E) const;
  bool ok() const { return separation_ok && curvatures_ok && parity_ok; }
};

// Pairwise separation/tangency audit plus the curvature and parity checks.
// threads <= 0 means use APOLLO_THREADS or the hardware count.
PackingReport verify_packing(const std::vector<SphereRecord>& records, const Vec& E, int rho, int threads = 0);

struct Cluster {
  std::vector<Vec> members;  // rho mutually tangent spheres, pairwise product -1
};

// Descends m to a base sphere and pulls the base cluster back along the
// inverse word; the result contains m.  Throws when descent cannot certify
// membership.
Cluster find_cluster(const GeneratorSet& g, const Vec& m);

struct DescartesReport {
  Rat generalized;      // k^t J^{-1} k
  bool generalized_ok = false;
  bool classical_checked = false;  // rho == 4 only
  bool classical_ok = false;
  Int classical_lhs, classical_rhs;
};

// k^t J^{-1} k = 0 for the curvature vector of a tangent cluster, with
// J^{-1} verified against J exactly; for rho = 4 also the classical
// sum-square identity.
DescartesReport descartes_check(const Cluster& cluster, const Vec& E);

std::string records_to_csv(const std::vector<SphereRecord>& records);

// Deterministic pseudo-random generator word image of x (property tests and
// the descartes sampler share it).
Vec random_orbit_image(const GeneratorSet& g, const Vec& x, int length, uint64_t& state);

}  // namespace apollo
