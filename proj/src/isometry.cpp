#include "apollo/isometry.hpp"

namespace apollo {

Vec Isometry::apply(const Vec& x) const {
  if ((int)x.size() != rho) throw Error("Isometry::apply: dimension mismatch");
  Vec r(rho, 0);
  for (int i = 0; i < rho; ++i) {
    Int acc = 0;
    for (int j = 0; j < rho; ++j) acc += rows[i][j] * x[j];
    r[i] = acc;
  }
  return r;
}

Isometry Isometry::compose(const Isometry& other) const {
  if (rho != other.rho) throw Error("Isometry::compose: dimension mismatch");
  Isometry out;
  out.rho = rho;
  out.rows.assign(rho, Vec(rho, 0));
  for (int i = 0; i < rho; ++i)
    for (int k = 0; k < rho; ++k) {
      if (sign(rows[i][k]) == 0) continue;
      for (int j = 0; j < rho; ++j) out.rows[i][j] += rows[i][k] * other.rows[k][j];
    }
  out.word = word;
  out.word.insert(out.word.end(), other.word.begin(), other.word.end());
  return out;
}

bool Isometry::is_identity() const {
  for (int i = 0; i < rho; ++i)
    for (int j = 0; j < rho; ++j)
      if (rows[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool Isometry::preserves_form() const {
  // Columns c_j = M e_j: need c_i (.) c_j == e_i (.) e_j.
  std::vector<Vec> cols(rho, Vec(rho));
  for (int i = 0; i < rho; ++i)
    for (int j = 0; j < rho; ++j) cols[j][i] = rows[i][j];
  for (int i = 0; i < rho; ++i)
    for (int j = i; j < rho; ++j)
      if (dot(cols[i], cols[j]) != (i == j ? 1 : -1)) return false;
  return true;
}

bool Isometry::is_involution() const { return compose(*this).is_identity(); }

bool Isometry::preserves_future() const {
  Vec D = all_ones(rho);
  return sign(dot(apply(D), D)) < 0;
}

Isometry Isometry::identity(int rho) {
  Isometry m;
  m.rho = rho;
  m.rows.assign(rho, Vec(rho, 0));
  for (int i = 0; i < rho; ++i) m.rows[i][i] = 1;
  return m;
}

namespace {

Isometry from_columns(int rho, const std::vector<RVec>& cols, const std::string& label, const char* op) {
  Isometry m;
  m.rho = rho;
  m.rows.assign(rho, Vec(rho));
  for (int j = 0; j < rho; ++j) {
    if (!is_integral(cols[j]))
      throw NonIntegral(std::string(op) + (label.empty() ? "" : " " + label) +
                        ": image of basis vector " + std::to_string(j + 1) +
                        " is not integral: " + to_string(cols[j]));
    for (int i = 0; i < rho; ++i) m.rows[i][j] = cols[j][i].get_num();
  }
  if (!label.empty()) m.word = {label};
  return m;
}

}  // namespace

Isometry reflection_matrix(const Vec& n, const std::string& label) {
  int rho = (int)n.size();
  std::vector<RVec> cols(rho);
  for (int j = 0; j < rho; ++j) cols[j] = reflect(n, unit(rho, j));
  Isometry m = from_columns(rho, cols, label, "reflection_matrix");
  if (!m.preserves_form()) throw Error("reflection_matrix: form not preserved (internal error)");
  return m;
}

Isometry phi_matrix(const Vec& P, const Vec& E, const std::string& label) {
  int rho = (int)P.size();
  std::vector<RVec> cols(rho);
  for (int j = 0; j < rho; ++j) cols[j] = phi_map(P, E, unit(rho, j));
  Isometry m = from_columns(rho, cols, label, "phi_matrix");
  if (!m.preserves_form()) throw Error("phi_matrix: form not preserved (internal error)");
  return m;
}

}  // namespace apollo
