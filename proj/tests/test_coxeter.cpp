#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "apollo/coxeter.hpp"

using namespace apollo;

TEST_CASE("pair relations") {
  // Sphere-swap mirrors are mutually parallel: products -4, self-products 4.
  auto viete = viete_mirrors_rho4();
  for (size_t i = 0; i < 4; ++i) {
    CHECK(dot(viete[i].vector, viete[i].vector) == 4);
    for (size_t j = i + 1; j < 4; ++j) {
      CHECK(dot(viete[i].vector, viete[j].vector) == -4);
      Relation r = pair_relation(viete[i].vector, viete[j].vector);
      CHECK(r.kind == Relation::Kind::Parallel);
      CHECK(r.q == 1);
    }
  }

  // Orthogonal pair: no edge.
  Relation r = pair_relation(parse_vec("1,-1,0,0,0"), parse_vec("0,0,0,1,-1"));
  CHECK(r.kind == Relation::Kind::Orthogonal);

  // Adjacent transpositions meet at the dihedral angle of order 3.
  Vec v12 = sub(unit(5, 0), unit(5, 1)), v23 = sub(unit(5, 1), unit(5, 2));
  CHECK(dot(v12, v23) == -2);
  r = pair_relation(v12, v23);
  CHECK(r.kind == Relation::Kind::Order);
  CHECK(r.order == 3);
  CHECK(r.q == make_rat(1, 4));

  // q is a ratio of products: invariant under scaling either mirror.
  r = pair_relation(scaled(v12, 7), scaled(v23, -3));
  CHECK(r.q == make_rat(1, 4));
  CHECK(r.order == 3);

  CHECK_THROWS_AS(pair_relation(parse_vec("0,0,1,1"), parse_vec("1,-1,1,1")), Error);
}

TEST_CASE("graphs of the face systems carry the printed self-products") {
  for (int rho = 5; rho <= 8; ++rho) {
    CoxeterGraph g = graph_for(rho, build_faces(rho));
    REQUIRE(g.nodes.size() == (size_t)rho + 1);
    for (int i = 0; i < rho + 1; ++i) {
      if (i == rho - 1)
        CHECK(g.nodes[i].self_product == 1);  // base face e_rho
      else
        CHECK(g.nodes[i].self_product == 4);
    }
  }
  // Walls carrying the point-reflection maps are not mirror nodes.
  CoxeterGraph g9 = graph_for(9, build_faces(9));
  CHECK(g9.nodes.size() == 10);
}

TEST_CASE("full symmetry generators and the swap-free alternative") {
  CoxeterGraph g = graph_for(4, gamma_mirrors_rho4());
  REQUIRE(g.nodes.size() == 4);  // v12, v34, v14, s2
  // Exact relations: v12-v14 and v34-v14 order 3; v12-s2 parallel; rest orthogonal.
  REQUIRE(g.edges.size() == 3);
  auto find_edge = [&](int i, int j) -> const CoxeterGraph::Edge* {
    for (const auto& e : g.edges)
      if ((e.i == i && e.j == j) || (e.i == j && e.j == i)) return &e;
    return nullptr;
  };
  REQUIRE(find_edge(0, 2) != nullptr);
  CHECK(find_edge(0, 2)->rel.order == 3);
  REQUIRE(find_edge(1, 2) != nullptr);
  CHECK(find_edge(1, 2)->rel.order == 3);
  REQUIRE(find_edge(0, 3) != nullptr);
  CHECK(find_edge(0, 3)->rel.kind == Relation::Kind::Parallel);

  // The derived fourth mirror: the swap-free set has the same edge pattern.
  auto gp = gamma_prime_mirrors_rho4();
  CHECK(gp[3].vector == parse_vec("1,-1,2,2"));
  CHECK(dot(gp[3].vector, gp[3].vector) == 4);
  // w is the s2-image of the mirror v12 and passes through the tangency of
  // e1 with the s2-image of e2.
  Vec w = gp[3].vector;
  Vec tangency = add(unit(4, 0), parse_vec("2,-1,2,2"));
  CHECK(dot(tangency, tangency) == 0);
  CHECK(dot(w, tangency) == 0);
  // Edges: v12-v14 (3), v34-v14 (3), v12-w (parallel), v14-w (3).
  CoxeterGraph g2 = graph_for(4, gp);
  REQUIRE(g2.edges.size() == 4);
  Relation r = pair_relation(gp[0].vector, gp[3].vector);
  CHECK(r.kind == Relation::Kind::Parallel);  // two parallel vertical mirrors
  r = pair_relation(gp[2].vector, gp[3].vector);
  CHECK(r.order == 3);
  r = pair_relation(gp[1].vector, gp[3].vector);
  CHECK(r.kind == Relation::Kind::Orthogonal);
}

TEST_CASE("dot and json output") {
  CoxeterGraph g = graph_for(4, viete_mirrors_rho4());
  CHECK(g.edges.size() == 6);  // complete graph, all parallel
  std::string dotfmt = g.to_dot();
  CHECK(dotfmt.find("graph coxeter") != std::string::npos);
  CHECK(dotfmt.find("label=\"inf\"") != std::string::npos);
  CHECK(g.to_dot() == g.to_dot());
  std::string j = g.to_json();
  CHECK(j.find("\"parallel\"") != std::string::npos);
}
