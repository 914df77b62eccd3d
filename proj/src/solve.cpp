#include "apollo/solve.hpp"

#include <algorithm>

namespace apollo {

Rat QuadExt::rational_value() const {
  if (!is_rational()) throw Error("QuadExt: not rational: " + str());
  return a;
}

static void require_same_field(const QuadExt& x, const QuadExt& y) {
  if (x.d != y.d && !x.is_rational() && !y.is_rational())
    throw Error("QuadExt: mixed radicands " + x.d.get_str() + " vs " + y.d.get_str());
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
  require_same_field(*this, o);
  Int rad = is_rational() ? o.d : d;
  return QuadExt(a + o.a, b + o.b, rad);
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
  require_same_field(*this, o);
  Int rad = is_rational() ? o.d : d;
  return QuadExt(a - o.a, b - o.b, rad);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
  require_same_field(*this, o);
  Int rad = is_rational() ? o.d : d;
  return QuadExt(a * o.a + b * o.b * Rat(rad), a * o.b + b * o.a, rad);
}

QuadExt QuadExt::inverse() const {
  Rat norm = a * a - b * b * Rat(d);
  if (sign(norm) == 0) throw Error("QuadExt: inverse of zero (or degenerate radicand)");
  return QuadExt(a / norm, -b / norm, d);
}

int QuadExt::sgn() const {
  if (is_rational()) return sign(a);
  int sa = sign(a), sb = sign(b);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) pull in opposite directions: compare a^2 against b^2 d.
  Rat lhs = a * a, rhs = b * b * Rat(d);
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sa : sb;
}

std::string QuadExt::str() const {
  if (is_rational()) return a.get_str();
  return a.get_str() + (sign(b) >= 0 ? "+" : "") + b.get_str() + "*sqrt(" + d.get_str() + ")";
}

bool QuadVec::is_rational() const {
  if (sign(d) == 0) return true;
  for (const Rat& x : v)
    if (sign(x) != 0) return false;
  return true;
}

Vec QuadVec::lattice() const {
  if (!is_rational()) throw Error("QuadVec: irrational ray " + str());
  return canonical_ray(clear_denominators(u));
}

QuadExt QuadVec::dot_with(const Vec& w) const { return QuadExt(dot(u, w), dot(v, w), d); }

QuadExt QuadVec::dot_self() const {
  Rat uu = dot(u, u), vv = dot(v, v), uv = dot(u, v);
  return QuadExt(uu + vv * Rat(d), Rat(2) * uv, d);
}

void QuadVec::normalize_future() {
  QuadExt s = dot_with(all_ones(rho()));
  int sg = s.sgn();
  if (sg == 0) throw Error("QuadVec: ray orthogonal to D");
  if (sg > 0) {
    for (Rat& x : u) x = -x;
    for (Rat& x : v) x = -x;
  }
}

std::string QuadVec::str() const {
  if (is_rational()) return "(" + to_string(u) + ")";
  return "(" + to_string(u) + ") + (" + to_string(v) + ")*sqrt(" + d.get_str() + ")";
}

// ---- exact rational elimination ------------------------------------------

namespace {

using RMat = std::vector<RVec>;

// Row echelon over Q; returns pivot column per row.
std::vector<int> row_reduce(RMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && sign(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sign(m[i][c]) == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back((int)c);
    ++r;
  }
  m.resize(r > 0 ? r : 0);
  return pivots;
}

// Nullspace basis (rational) of an r x c matrix.
std::vector<RVec> nullspace(RMat m, size_t cols) {
  std::vector<int> pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RVec> basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    RVec b(cols, Rat(0));
    b[fc] = 1;
    for (size_t r = 0; r < m.size(); ++r) {
      int pc = pivots[r];
      b[pc] = -m[r][fc];
    }
    basis.push_back(std::move(b));
  }
  return basis;
}

}  // namespace

std::vector<Vec> lattice_kernel(const std::vector<Vec>& walls, const std::vector<Vec>& span, int rho) {
  std::vector<Vec> basis = span;
  if (basis.empty())
    for (int i = 0; i < rho; ++i) basis.push_back(unit(rho, i));

  RMat m;
  for (const Vec& w : walls) {
    RVec row(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) row[j] = Rat(dot(w, basis[j]));
    m.push_back(std::move(row));
  }
  std::vector<RVec> coeffs =
      m.empty() ? [&] {
        std::vector<RVec> id;
        for (size_t j = 0; j < basis.size(); ++j) {
          RVec b(basis.size(), Rat(0));
          b[j] = 1;
          id.push_back(std::move(b));
        }
        return id;
      }()
                : nullspace(std::move(m), basis.size());

  std::vector<Vec> out;
  for (const RVec& c : coeffs) {
    RVec x(rho, Rat(0));
    for (size_t j = 0; j < basis.size(); ++j)
      for (int i = 0; i < rho; ++i) x[i] += c[j] * Rat(basis[j][i]);
    bool zero = true;
    for (const Rat& xi : x)
      if (sign(xi) != 0) zero = false;
    if (zero) continue;  // span vectors were dependent
    out.push_back(primitive(clear_denominators(x)));
  }
  return out;
}

namespace {

// True when x lies in the rational span of the given vectors.
bool in_span(const Vec& x, const std::vector<Vec>& basis) {
  if (basis.empty()) return false;
  size_t rho = x.size();
  RMat m;  // columns = basis vectors, augmented with x
  for (size_t i = 0; i < rho; ++i) {
    RVec row(basis.size() + 1);
    for (size_t j = 0; j < basis.size(); ++j) row[j] = Rat(basis[j][i]);
    row[basis.size()] = Rat(x[i]);
    m.push_back(std::move(row));
  }
  std::vector<int> pivots = row_reduce(m);
  for (int p : pivots)
    if (p == (int)basis.size()) return false;
  return true;
}

bool proportional(const Vec& a, const Vec& b) {
  // a, b nonzero: proportional iff a_i b_j == a_j b_i for all i < j.
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace

Vec isotropic_on_plane(const std::vector<Vec>& span, const std::vector<Vec>& walls, const Vec& known) {
  int rho = (int)known.size();
  if (dot(known, known) != 0) throw Error("isotropic_on_plane: known ray must be isotropic");
  std::vector<Vec> sol = lattice_kernel(walls, span, rho);
  if (sol.size() != 2)
    throw Error("isotropic_on_plane: solution space has dimension " + std::to_string(sol.size()) + ", need 2");
  if (!in_span(known, sol)) throw Error("isotropic_on_plane: known ray not in the solution space");

  const Vec& w = proportional(known, sol[0]) ? sol[1] : sol[0];
  Int kw = dot(known, w);
  if (sign(kw) == 0) throw Error("isotropic_on_plane: degenerate pencil (known orthogonal to complement)");
  Int ww = dot(w, w);
  // a*known + b*w isotropic with b != 0 forces a = -(w.w)/(2 known.w) * b.
  Vec q = add(scaled(known, -ww), scaled(w, 2 * kw));
  if (proportional(q, known)) throw Error("isotropic_on_plane: second ray equals known");
  q = canonical_ray(q);
  if (dot(q, q) != 0) throw Error("isotropic_on_plane: internal error, ray not isotropic");
  for (const Vec& wall : walls)
    if (dot(wall, q) != 0) throw Error("isotropic_on_plane: internal error, wall equation violated");
  return q;
}

std::vector<QuadVec> isotropic_rays_in_pencil(const Vec& b1, const Vec& b2) {
  int rho = (int)b1.size();
  Int A = dot(b1, b1), B = dot(b1, b2), C = dot(b2, b2);
  // Quadratic A a^2 + 2B ab + C b^2 = 0 on the pencil a*b1 + b*b2.
  std::vector<QuadVec> out;
  auto push_rational = [&](const Rat& a, const Rat& b) {
    QuadVec qv;
    qv.u.assign(rho, Rat(0));
    qv.v.assign(rho, Rat(0));
    qv.d = 0;
    for (int i = 0; i < rho; ++i) qv.u[i] = a * Rat(b1[i]) + b * Rat(b2[i]);
    qv.normalize_future();
    out.push_back(std::move(qv));
  };

  if (sign(A) == 0 && sign(C) == 0 && sign(B) == 0) throw Error("isotropic_rays_in_pencil: totally isotropic pencil");
  if (sign(A) == 0) {
    // b1 itself isotropic: rays are b1 and (when B != 0) 2B*b1... the other root of 2B ab + C b^2.
    push_rational(Rat(1), Rat(0));
    if (sign(B) != 0) push_rational(make_rat(-C, 2 * B), Rat(1));
    return out;
  }
  Int disc = B * B - A * C;
  int ds = sign(disc);
  if (ds < 0) return out;  // no real intersection
  if (ds == 0) {
    push_rational(make_rat(-B, A), Rat(1));
    return out;
  }
  if (is_perfect_square(disc)) {
    Int r = isqrt_exact(disc);
    push_rational(make_rat(-B + r, A), Rat(1));
    push_rational(make_rat(-B - r, A), Rat(1));
    return out;
  }
  // Irrational pair a = (-B +/- sqrt(disc))/A, b = 1.
  for (int s : {+1, -1}) {
    QuadVec qv;
    qv.d = disc;
    qv.u.assign(rho, Rat(0));
    qv.v.assign(rho, Rat(0));
    Rat invA = make_rat(1, A);
    for (int i = 0; i < rho; ++i) {
      // (-B/A) * b1 + b2  +  (s/A)*sqrt(disc) * b1
      qv.u[i] = Rat(-B) * invA * Rat(b1[i]) + Rat(b2[i]);
      qv.v[i] = Rat(s) * invA * Rat(b1[i]);
    }
    qv.normalize_future();
    out.push_back(std::move(qv));
  }
  return out;
}

}  // namespace apollo
