#pragma once

#include <string>
#include <vector>

#include "apollo/domain.hpp"

namespace apollo {

/**
 * Pairwise relation between two mirrors, decided exactly from
 * q = (n.m)^2 / ((n.n)(m.m)):
 *   q = 0          orthogonal (no edge)
 *   q = cos^2(pi/k) for k in {3,4,6}  edge of order k
 *   q = 1          parallel mirrors (tangent at the boundary)
 *   q > 1          ultraparallel, weight q
 *   other q < 1    non-crystallographic angle, reported with exact q
 */
struct Relation {
  enum class Kind { Orthogonal, Order, Parallel, Ultraparallel, NonCrystallographic };
  Kind kind = Kind::Orthogonal;
  int order = 2;  // for Kind::Order
  Rat q;
};

Relation pair_relation(const Vec& n, const Vec& m);

struct CoxeterGraph {
  struct Node {
    std::string label;
    Int self_product;
  };
  struct Edge {
    int i = 0, j = 0;
    Relation rel;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;  // only non-orthogonal pairs

  std::string to_dot() const;
  std::string to_json() const;
};

// Graph of the reflective generator mirrors (walls carrying point-reflection
// maps are skipped).
CoxeterGraph graph_for(int rho, const std::vector<Face>& generator_faces);

// Demo mirror systems for rho = 4: the four sphere-swap inversions, the full
// symmetry generators, and an index-two alternative that avoids the swap
// inversions (its fourth mirror is derived, not printed anywhere: the
// vertical line through the tangency of e_1 with the reflected copy of e_2).
std::vector<Face> viete_mirrors_rho4();
std::vector<Face> gamma_mirrors_rho4();
std::vector<Face> gamma_prime_mirrors_rho4();

}  // namespace apollo
