#include "apollo/vec.hpp"

#include <sstream>

namespace apollo {

Vec unit(int rho, int i) {
  Vec v(rho, 0);
  v[i] = 1;
  return v;
}

Vec all_ones(int rho) { return Vec(rho, 1); }

Int sum(const Vec& v) {
  Int s = 0;
  for (const Int& x : v) s += x;
  return s;
}

Rat sum(const RVec& v) {
  Rat s = 0;
  for (const Rat& x : v) s += x;
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("add: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("sub: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec neg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec scaled(const Vec& a, const Int& c) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

RVec to_rvec(const Vec& v) {
  RVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

RVec add(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw Error("add: dimension mismatch");
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RVec sub(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw Error("sub: dimension mismatch");
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RVec scaled(const RVec& a, const Rat& c) {
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

bool is_integral(const RVec& v) {
  for (const Rat& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

Vec clear_denominators(const RVec& v) {
  Int m = 1;
  for (const Rat& x : v) m = lcm(m, x.get_den());
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(m);
    r[i] = s.get_num();  // denominator is 1 after scaling by the lcm
  }
  return r;
}

Vec primitive(const Vec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (sign(g) == 0) throw Error("primitive: zero vector");
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

Vec canonical_ray(const Vec& v) {
  Vec p = primitive(v);
  Int s = sum(p);
  if (sign(s) < 0) return neg(p);
  if (sign(s) > 0) return p;
  for (const Int& x : p) {
    if (sign(x) > 0) return p;
    if (sign(x) < 0) return neg(p);
  }
  throw Error("canonical_ray: zero vector");
}

std::string to_string(const Vec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out;
}

std::string to_string(const RVec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out;
}

Vec parse_vec(const std::string& text) {
  Vec v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw Error("parse_vec: empty component in '" + text + "'");
    tok = tok.substr(a, b - a + 1);
    try {
      v.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw Error("parse_vec: bad integer '" + tok + "'");
    }
  }
  if (v.empty()) throw Error("parse_vec: empty vector");
  return v;
}

}  // namespace apollo
