// Command-line front end: verification reports, vertex tables, orbit
// enumeration, cluster certificates, Coxeter graphs, Descartes checks and
// SVG figures.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "apollo/coxeter.hpp"
#include "apollo/domain.hpp"
#include "apollo/packing.hpp"
#include "apollo/render.hpp"
#include "json.hpp"

using namespace apollo;

namespace {

Int default_kmax(int rho) { return rho <= 5 ? 40 : (rho <= 8 ? 10 : 5); }

void write_out(const std::string& out, const std::string& content) {
  if (out.empty())
    std::fwrite(content.data(), 1, content.size(), stdout);
  else
    write_file(out, content);
}

Vec perspective_or_default(int rho, const std::string& flag) {
  if (flag.empty()) return strip_perspective(rho);
  Vec E = parse_vec(flag);
  if ((int)E.size() != rho) throw Error("perspective has arity " + std::to_string(E.size()) + ", need rho");
  if (dot(E, E) != 0) throw Error("perspective must be isotropic");
  return E;
}

int run_verify(int rho, Int kmax, const std::string& pers, const std::string& format, const std::string& out) {
  DomainCase cs = run_case(rho);
  GeneratorSet g = build_group(rho);
  Vec E = perspective_or_default(rho, pers);
  EnumerateResult er = enumerate_orbit(g, E, kmax);
  PackingReport rep = verify_packing(er.records, E, rho);

  if (format == "json") {
    nlohmann::json j;
    j["domain"] = nlohmann::json::parse(cs.to_json());
    j["packing"] = nlohmann::json::parse(rep.to_json(er, rho, E));
    write_out(out, j.dump(2) + "\n");
  } else {
    std::string txt = cs.to_text();
    txt += "\norbit audit (kmax " + kmax.get_str() + ", " + std::to_string(er.records.size()) + " records, height <= " +
           er.height_bound.get_str() + (er.truncated ? ", truncated" : "") + "):\n";
    txt += std::string("  separation (pairwise product <= -1): ") + (rep.separation_ok ? "pass" : "FAIL") + "\n";
    txt += std::string("  curvatures nonnegative integers:     ") + (rep.curvatures_ok ? "pass" : "FAIL") + "\n";
    txt += std::string("  parity (m (.) e_rho odd):            ") + (rep.parity_ok ? "pass" : "FAIL") + "\n";
    txt += "  tangent pairs: " + std::to_string(rep.tangent_pairs) + "\n";
    write_out(out, txt);
  }
  if (!cs.passed()) {
    for (const CheckResult& c : cs.checks)
      if (c.verdict == CheckResult::Verdict::Fail) {
        std::cerr << "failed check: " << c.name << " = " << c.value << "\n";
        return 1;
      }
  }
  if (!rep.ok()) {
    std::cerr << "packing audit failed";
    if (!rep.violations.empty())
      std::cerr << ": pair (" << rep.violations[0].i << "," << rep.violations[0].j << ") product "
                << rep.violations[0].product.get_str();
    std::cerr << "\n";
    return 1;
  }
  return 0;
}

int run_vertices(int rho, const std::string& format, const std::string& out) {
  std::vector<Vec> Q, Qp;
  solve_vertices(rho, build_faces(rho), Q, Qp);
  if (format == "json") {
    nlohmann::json j;
    j["rho"] = rho;
    for (const Vec& v : Q) j["Q"].push_back(to_string(v));
    for (const Vec& v : Qp) j["Qprime"].push_back(to_string(v));
    write_out(out, j.dump(2) + "\n");
  } else {
    std::string txt;
    for (size_t i = 0; i < Q.size(); ++i) {
      txt += "Q" + std::to_string(i + 1) + "  = " + to_string(Q[i]) + "\n";
      txt += "Q" + std::to_string(i + 1) + "' = " + to_string(Qp[i]) + "\n";
    }
    write_out(out, txt);
  }
  return 0;
}

int run_enumerate(int rho, Int kmax, const std::string& pers, const std::string& format, const std::string& out) {
  GeneratorSet g = build_group(rho);
  Vec E = perspective_or_default(rho, pers);
  EnumerateResult er = enumerate_orbit(g, E, kmax);
  if (format == "json") {
    nlohmann::json j;
    j["rho"] = rho;
    j["kmax"] = kmax.get_str();
    j["height_bound"] = er.height_bound.get_str();
    j["truncated"] = er.truncated;
    for (const SphereRecord& r : er.records)
      j["records"].push_back({{"curvature", r.curvature.get_str()},
                              {"vector", to_string(r.m)},
                              {"word_length", r.word_length}});
    write_out(out, j.dump(2) + "\n");
  } else {
    write_out(out, records_to_csv(er.records));
  }
  return 0;
}

int run_cluster(int rho, const std::string& vec, const std::string& format, const std::string& out) {
  GeneratorSet g = build_group(rho);
  Vec m = parse_vec(vec);
  if ((int)m.size() != rho) throw Error("vector arity does not match rho");
  if (dot(m, m) != 1) throw Error("cluster wants a sphere vector with m (.) m = 1");
  Cluster cl;
  try {
    cl = find_cluster(g, m);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  if (format == "json") {
    nlohmann::json j;
    for (const Vec& v : cl.members) j["members"].push_back(to_string(v));
    DescartesReport rep = descartes_check(cl, g.strip_E);
    j["descartes_zero"] = rep.generalized_ok;
    write_out(out, j.dump(2) + "\n");
  } else {
    std::string txt;
    for (const Vec& v : cl.members)
      txt += to_string(v) + "   curvature " + Int(-dot(v, g.strip_E)).get_str() + "\n";
    write_out(out, txt);
  }
  return 0;
}

int run_coxeter(int rho, const std::string& group, const std::string& format, const std::string& out) {
  std::vector<Face> faces;
  if (group == "faces") {
    faces = build_faces(rho);
  } else if (rho == 4 && group == "ap") {
    faces = viete_mirrors_rho4();
  } else if (rho == 4 && group == "gamma") {
    faces = gamma_mirrors_rho4();
  } else if (rho == 4 && group == "prime") {
    faces = gamma_prime_mirrors_rho4();
  } else {
    throw Error("group '" + group + "' is only available at rho = 4");
  }
  CoxeterGraph g = graph_for(rho, faces);
  write_out(out, format == "json" ? g.to_json() + "\n" : g.to_dot());
  return 0;
}

int run_render(int rho, Int kmax, const std::string& out) {
  if (rho != 4 && rho != 5) throw Error("render supports rho = 4 (strip) and rho = 5 (cross-section)");
  GeneratorSet g = build_group(rho);
  EnumerateResult er = enumerate_orbit(g, g.strip_E, kmax);
  std::vector<CircleDatum> data;
  if (rho == 4) {
    EuclideanChart chart = make_chart(4, g.strip_E);
    for (const SphereRecord& r : er.records) data.push_back(sphere_to_datum(r, chart));
  } else {
    EuclideanChart chart = make_slice_chart(5, g.strip_E);
    Vec plane = sub(unit(5, 3), unit(5, 4));
    for (const SphereRecord& r : er.records) {
      CircleDatum d;
      if (slice_datum(r, plane, chart, d)) data.push_back(d);
    }
  }
  write_out(out, emit_svg(data));
  return 0;
}

int run_descartes(int rho, int count, uint64_t seed, const std::string& out) {
  GeneratorSet g = build_group(rho);
  uint64_t st = seed;
  std::string txt;
  int failures = 0;
  for (int t = 0; t < count; ++t) {
    int len = 5 + t % 9;
    Cluster cl;
    uint64_t fixed = st;
    for (int i = 0; i < rho; ++i) {
      uint64_t s = fixed;
      cl.members.push_back(random_orbit_image(g, unit(rho, i), len, s));
      if (i + 1 == rho) st = s;
    }
    DescartesReport rep = descartes_check(cl, g.strip_E);
    bool ok = rep.generalized_ok && (!rep.classical_checked || rep.classical_ok);
    failures += ok ? 0 : 1;
    if (!ok) txt += "cluster " + std::to_string(t) + ": k^t J^-1 k = " + rep.generalized.get_str() + "\n";
  }
  txt += "clusters checked: " + std::to_string(count) + ", identity failures: " + std::to_string(failures) + "\n";
  write_out(out, txt);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hypersphere packing toolkit"};
  app.require_subcommand(1);

  int rho = 4;
  std::string kmax_flag, perspective, format, out, vector_flag, group = "faces";
  int count = 100;
  uint64_t seed = 0xA110;

  auto add_common = [&](CLI::App* sub, const char* default_format) {
    sub->add_option("--rho", rho, "dimension parameter, 4..10")->required()->check(CLI::Range(4, 10));
    sub->add_option("--format", format, std::string("output format (default ") + default_format + ")");
    sub->add_option("--out", out, "output path (default stdout)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the per-rho checklist and the orbit audit");
  add_common(verify, "text");
  verify->add_option("--kmax", kmax_flag, "curvature bound (default per rho)");
  verify->add_option("--perspective", perspective, "isotropic lattice vector, comma-separated");

  CLI::App* vertices = app.add_subcommand("vertices", "print the prism vertex tables");
  add_common(vertices, "text");

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "breadth-first sphere enumeration");
  add_common(enumerate_cmd, "csv");
  enumerate_cmd->add_option("--kmax", kmax_flag, "curvature bound (default per rho)");
  enumerate_cmd->add_option("--perspective", perspective, "isotropic lattice vector");

  CLI::App* cluster = app.add_subcommand("cluster", "certify a tangent cluster through a sphere");
  add_common(cluster, "text");
  cluster->add_option("--vector", vector_flag, "sphere vector, comma-separated")->required();

  CLI::App* coxeter = app.add_subcommand("coxeter", "mirror-system graph");
  add_common(coxeter, "dot");
  coxeter->add_option("--group", group, "faces | ap | gamma | prime (rho 4 demos)");

  CLI::App* render = app.add_subcommand("render", "SVG figure (rho 4 strip, rho 5 cross-section)");
  add_common(render, "svg");
  render->add_option("--kmax", kmax_flag, "curvature bound (default per rho)");

  CLI::App* descartes = app.add_subcommand("descartes", "sample clusters and check the curvature identity");
  add_common(descartes, "text");
  descartes->add_option("--count", count, "number of clusters");
  descartes->add_option("--seed", seed, "sampler seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Int kmax = kmax_flag.empty() ? default_kmax(rho) : Int(kmax_flag);
    if (sign(kmax) < 0) throw Error("kmax must be nonnegative");
    if (verify->parsed()) return run_verify(rho, kmax, perspective, format.empty() ? "text" : format, out);
    if (vertices->parsed()) return run_vertices(rho, format.empty() ? "text" : format, out);
    if (enumerate_cmd->parsed()) return run_enumerate(rho, kmax, perspective, format.empty() ? "csv" : format, out);
    if (cluster->parsed()) return run_cluster(rho, vector_flag, format.empty() ? "text" : format, out);
    if (coxeter->parsed()) return run_coxeter(rho, group, format.empty() ? "dot" : format, out);
    if (render->parsed()) return run_render(rho, kmax, out);
    if (descartes->parsed()) return run_descartes(rho, count, seed, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
