#pragma once

#include <string>
#include <vector>

#include "apollo/lorentz.hpp"

namespace apollo {

/**
 * Exact integer matrix acting on the lattice, with its generator word kept
 * for provenance.  Invariants: M^t J M = J and M maps the future cone to
 * itself.
 */
struct Isometry {
  int rho = 0;
  std::vector<Vec> rows;  // row-major
  std::vector<std::string> word;

  Vec apply(const Vec& x) const;
  Isometry compose(const Isometry& other) const;  // this * other
  bool is_identity() const;
  bool preserves_form() const;   // M^t J M == J exactly
  bool is_involution() const;    // M*M == I
  bool preserves_future() const; // (M D) (.) D < 0

  static Isometry identity(int rho);
};

// Column-by-column reflection through H_n.  Throws NonIntegral when the
// reflection does not preserve the lattice.
Isometry reflection_matrix(const Vec& n, const std::string& label = "");

// Matrix of the -1 map centered at P in the perspective E (phi_map as a
// lattice isometry).  Throws NonIntegral when not integral.
Isometry phi_matrix(const Vec& P, const Vec& E, const std::string& label = "");

}  // namespace apollo
