#pragma once

#include <string>
#include <vector>

#include "apollo/numeric.hpp"

namespace apollo {

// A point of the lattice in the tangent-sphere basis e_1..e_rho.
// Text format everywhere: comma-separated integers, rho inferred from arity.
using Vec = std::vector<Int>;
using RVec = std::vector<Rat>;

Vec unit(int rho, int i);  // e_{i+1}, 0-based index
Vec all_ones(int rho);     // D = e_1 + ... + e_rho

Int sum(const Vec& v);
Rat sum(const RVec& v);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec neg(const Vec& a);
Vec scaled(const Vec& a, const Int& c);

RVec to_rvec(const Vec& v);
RVec add(const RVec& a, const RVec& b);
RVec sub(const RVec& a, const RVec& b);
RVec scaled(const RVec& a, const Rat& c);

bool is_integral(const RVec& v);

// Multiplies by the lcm of denominators; result is an integer vector on the same ray.
Vec clear_denominators(const RVec& v);

// Divides by the gcd of the entries (gcd 1 afterwards); zero vector rejected.
Vec primitive(const Vec& v);

// Primitive with sign fixed by v (.) D < 0 where applicable (v (.) D = (2-rho)*sum,
// so the rule is sum > 0), else by first nonzero coordinate positive.
Vec canonical_ray(const Vec& v);

std::string to_string(const Vec& v);
std::string to_string(const RVec& v);
Vec parse_vec(const std::string& text);

}  // namespace apollo
