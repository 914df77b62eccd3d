#include "apollo/lorentz.hpp"

namespace apollo {

std::vector<Vec> BilinearForm::matrix() const {
  std::vector<Vec> m(rho, Vec(rho));
  for (int i = 0; i < rho; ++i)
    for (int j = 0; j < rho; ++j) m[i][j] = entry(i, j);
  return m;
}

Int BilinearForm::apply(const Vec& u, const Vec& v) const {
  if ((int)u.size() != rho || (int)v.size() != rho) throw Error("BilinearForm::apply: dimension mismatch");
  Int acc = 0;
  for (int i = 0; i < rho; ++i) {
    Int row = 0;
    for (int j = 0; j < rho; ++j) row += entry(i, j) * v[j];
    acc += u[i] * row;
  }
  return acc;
}

std::vector<RVec> BilinearForm::inverse() const {
  Rat half = make_rat(1, 2);
  Rat off = make_rat(1, Int(2 * (2 - rho)));
  std::vector<RVec> inv(rho, RVec(rho));
  for (int i = 0; i < rho; ++i)
    for (int j = 0; j < rho; ++j) inv[i][j] = (i == j ? half : Rat(0)) + off;
  return inv;
}

bool BilinearForm::inverse_check() const {
  auto inv = inverse();
  for (int i = 0; i < rho; ++i) {
    for (int j = 0; j < rho; ++j) {
      Rat acc = 0;
      for (int k = 0; k < rho; ++k) acc += Rat(entry(i, k)) * inv[k][j];
      if (acc != (i == j ? Rat(1) : Rat(0))) return false;
    }
  }
  return true;
}

Int dot(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw Error("dot: dimension mismatch");
  Int s = 0, su = 0, sv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    s += u[i] * v[i];
    su += u[i];
    sv += v[i];
  }
  return 2 * s - su * sv;
}

Rat dot(const RVec& u, const RVec& v) {
  if (u.size() != v.size()) throw Error("dot: dimension mismatch");
  Rat s = 0, su = 0, sv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    s += u[i] * v[i];
    su += u[i];
    sv += v[i];
  }
  return 2 * s - su * sv;
}

Rat dot(const RVec& u, const Vec& v) {
  if (u.size() != v.size()) throw Error("dot: dimension mismatch");
  Rat s = 0, su = 0;
  Int sv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    s += u[i] * Rat(v[i]);
    su += u[i];
    sv += v[i];
  }
  return 2 * s - su * Rat(sv);
}

RVec reflect(const Vec& n, const Vec& x) { return reflect(n, to_rvec(x)); }

RVec reflect(const Vec& n, const RVec& x) {
  Int nn = dot(n, n);
  if (sign(nn) <= 0) throw Error("reflect: mirror vector must have positive self-product, got " + nn.get_str());
  Rat coef = Rat(-2) * dot(x, n) / Rat(nn);
  RVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + coef * Rat(n[i]);
  return r;
}

static void phi_preconditions(const Vec& P, const Vec& E, const Int& pe) {
  if (dot(P, P) != 0) throw Error("phi_map: P must be isotropic");
  if (dot(E, E) != 0) throw Error("phi_map: E must be isotropic");
  if (sign(pe) == 0) throw Error("phi_map: P (.) E == 0");
}

RVec phi_map(const Vec& P, const Vec& E, const Vec& x) { return phi_map(P, E, to_rvec(x)); }

RVec phi_map(const Vec& P, const Vec& E, const RVec& x) {
  Int pe = dot(P, E);
  phi_preconditions(P, E, pe);
  Rat a = Rat(2) * dot(x, P) / Rat(pe);
  Rat b = Rat(2) * dot(x, E) / Rat(pe);
  RVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = a * Rat(E[i]) + b * Rat(P[i]) - x[i];
  return r;
}

Rat curvature(const Vec& n, const Vec& E) {
  Int nn = dot(n, n);
  if (sign(nn) <= 0) throw Error("curvature: n (.) n must be positive");
  Int root = isqrt_exact(nn);  // throws when not a perfect square
  return make_rat(-dot(n, E), root);
}

Rat curvature_squared(const Vec& n, const Vec& E) {
  Int nn = dot(n, n);
  if (sign(nn) <= 0) throw Error("curvature_squared: n (.) n must be positive");
  Int ne = dot(n, E);
  return make_rat(ne * ne, nn);
}

RVec center(const Vec& m, const Vec& E) {
  if (sign(dot(m, E)) == 0) throw Error("center: curvature 0, center at infinity");
  return reflect(m, E);
}

Vec center_ray(const Vec& m, const Vec& E) { return canonical_ray(clear_denominators(center(m, E))); }

Rat euclid_dist2(const Vec& A, const Vec& B, const Vec& E) {
  if (dot(A, A) != 0 || dot(B, B) != 0) throw Error("euclid_dist2: endpoints must be isotropic");
  Int ae = dot(A, E), be = dot(B, E);
  if (sign(ae) == 0 || sign(be) == 0) throw Error("euclid_dist2: endpoint on the ray of E");
  return make_rat(-2 * dot(A, B), ae * be);
}

Vec midpoint(const Vec& A, const Vec& B, const Vec& E) {
  if (dot(A, A) != 0 || dot(B, B) != 0) throw Error("midpoint: endpoints must be isotropic");
  Int ae = dot(A, E), be = dot(B, E);
  if (sign(ae) == 0 || sign(be) == 0) throw Error("midpoint: endpoint on the ray of E");
  RVec An = scaled(to_rvec(A), make_rat(-1, ae));
  RVec Bn = scaled(to_rvec(B), make_rat(-1, be));
  RVec M0 = add(An, Bn);
  Rat m00 = dot(M0, M0);
  Rat m0e = dot(M0, E);
  if (sign(m0e) == 0) throw Error("midpoint: degenerate pair");
  Rat lambda = -m00 / (Rat(2) * m0e);
  RVec M = M0;
  for (size_t i = 0; i < M.size(); ++i) M[i] += lambda * Rat(E[i]);
  Vec out = canonical_ray(clear_denominators(M));
  if (dot(out, out) != 0) throw Error("midpoint: result not isotropic");
  return out;
}

}  // namespace apollo
