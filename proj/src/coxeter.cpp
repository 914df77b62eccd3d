#include "apollo/coxeter.hpp"

#include "json.hpp"

namespace apollo {

Relation pair_relation(const Vec& n, const Vec& m) {
  Int nn = dot(n, n), mm = dot(m, m);
  if (sign(nn) <= 0 || sign(mm) <= 0) throw Error("pair_relation: mirrors need positive self-products");
  Int nm = dot(n, m);
  Relation rel;
  rel.q = make_rat(nm * nm, nn * mm);
  if (sign(rel.q) == 0) {
    rel.kind = Relation::Kind::Orthogonal;
    rel.order = 2;
  } else if (rel.q == make_rat(1, 4)) {
    rel.kind = Relation::Kind::Order;
    rel.order = 3;
  } else if (rel.q == make_rat(1, 2)) {
    rel.kind = Relation::Kind::Order;
    rel.order = 4;
  } else if (rel.q == make_rat(3, 4)) {
    rel.kind = Relation::Kind::Order;
    rel.order = 6;
  } else if (rel.q == 1) {
    rel.kind = Relation::Kind::Parallel;
  } else if (rel.q > 1) {
    rel.kind = Relation::Kind::Ultraparallel;
  } else {
    rel.kind = Relation::Kind::NonCrystallographic;
  }
  return rel;
}

CoxeterGraph graph_for(int, const std::vector<Face>& generator_faces) {
  CoxeterGraph g;
  std::vector<const Face*> mirrors;
  for (const Face& f : generator_faces) {
    if (f.kind != Face::Kind::Reflection) continue;
    mirrors.push_back(&f);
    g.nodes.push_back({f.label, dot(f.vector, f.vector)});
  }
  for (size_t i = 0; i < mirrors.size(); ++i)
    for (size_t j = i + 1; j < mirrors.size(); ++j) {
      Relation r = pair_relation(mirrors[i]->vector, mirrors[j]->vector);
      if (r.kind == Relation::Kind::Orthogonal) continue;
      g.edges.push_back({(int)i, (int)j, r});
    }
  return g;
}

namespace {

std::string edge_attr(const Relation& r) {
  switch (r.kind) {
    case Relation::Kind::Order:
      return r.order == 3 ? "" : "label=\"" + std::to_string(r.order) + "\"";
    case Relation::Kind::Parallel:
      return "label=\"inf\"";
    case Relation::Kind::Ultraparallel:
      return "style=dashed,label=\"q=" + r.q.get_str() + "\"";
    case Relation::Kind::NonCrystallographic:
      return "style=dotted,label=\"q=" + r.q.get_str() + "\"";
    case Relation::Kind::Orthogonal:
      break;
  }
  return "";
}

const char* kind_name(Relation::Kind k) {
  switch (k) {
    case Relation::Kind::Orthogonal: return "orthogonal";
    case Relation::Kind::Order: return "order";
    case Relation::Kind::Parallel: return "parallel";
    case Relation::Kind::Ultraparallel: return "ultraparallel";
    case Relation::Kind::NonCrystallographic: return "non-crystallographic";
  }
  return "?";
}

}  // namespace

std::string CoxeterGraph::to_dot() const {
  std::string out = "graph coxeter {\n  node [shape=circle];\n";
  for (size_t i = 0; i < nodes.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + nodes[i].label + "\\n" + nodes[i].self_product.get_str() +
           "\"];\n";
  for (const Edge& e : edges) {
    std::string attr = edge_attr(e.rel);
    out += "  n" + std::to_string(e.i) + " -- n" + std::to_string(e.j);
    if (!attr.empty()) out += " [" + attr + "]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string CoxeterGraph::to_json() const {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (const Node& n : nodes) j["nodes"].push_back({{"label", n.label}, {"self_product", n.self_product.get_str()}});
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : edges)
    j["edges"].push_back({{"i", e.i},
                          {"j", e.j},
                          {"kind", kind_name(e.rel.kind)},
                          {"order", e.rel.order},
                          {"q", e.rel.q.get_str()}});
  return j.dump(2);
}

namespace {

Face mirror(const std::string& label, const std::string& role, const Vec& v) {
  Face f;
  f.label = label;
  f.role = role;
  f.vector = v;
  return f;
}

}  // namespace

std::vector<Face> viete_mirrors_rho4() {
  return {
      mirror("s1", "viete", parse_vec("-1,1,1,1")),
      mirror("s2", "viete", parse_vec("1,-1,1,1")),
      mirror("s3", "viete", parse_vec("1,1,-1,1")),
      mirror("s4", "viete", parse_vec("1,1,1,-1")),
  };
}

std::vector<Face> gamma_mirrors_rho4() {
  return {
      mirror("v12", "transposition", parse_vec("1,-1,0,0")),
      mirror("v34", "transposition", parse_vec("0,0,1,-1")),
      mirror("v14", "transposition", parse_vec("1,0,0,-1")),
      mirror("s2", "viete", parse_vec("1,-1,1,1")),
  };
}

std::vector<Face> gamma_prime_mirrors_rho4() {
  // w = image of the mirror v12 under the inversion s2 (derived vector).
  return {
      mirror("v12", "transposition", parse_vec("1,-1,0,0")),
      mirror("v34", "transposition", parse_vec("0,0,1,-1")),
      mirror("v14", "transposition", parse_vec("1,0,0,-1")),
      mirror("w", "derived", parse_vec("1,-1,2,2")),
  };
}

}  // namespace apollo
