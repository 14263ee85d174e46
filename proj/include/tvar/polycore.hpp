#pragma once

#include "tvar/exactla.hpp"

#include <cstddef>

namespace tvar {

// Polyhedral cone in Q^dim. Both lists are canonical: primitive, lex sorted.
// A lineality space shows up as +/- pairs in `rays`; equations as +/- pairs in `facets`.
struct Cone {
  std::size_t dim = 0;
  IntMat rays;
  IntMat facets;

  static auto from_rays(std::size_t dim, const IntMat &gens) -> Cone;
  // The cone {x : a.x >= 0 for every row a}.
  static auto from_inequalities(std::size_t dim, const IntMat &ineqs) -> Cone;

  [[nodiscard]] auto contains(const IntVec &x) const -> bool;
  [[nodiscard]] auto contains(const RatVec &x) const -> bool;
  [[nodiscard]] auto is_pointed() const -> bool;
  [[nodiscard]] auto is_full_dimensional() const -> bool;
  // Rays that are not part of a +/- lineality pair.
  [[nodiscard]] auto extreme_rays() const -> IntMat;
  // Facet normals that are not part of a +/- equation pair.
  [[nodiscard]] auto proper_facets() const -> IntMat;

  friend auto operator==(const Cone &, const Cone &) -> bool = default;
};

// Saturated lineality basis plus extreme rays (projected orthogonally off the
// lineality space) of {x : A x >= 0}.
struct ConeGenerators {
  IntMat lineality;
  IntMat rays;
};
auto cone_generators(std::size_t dim, const IntMat &ineqs) -> ConeGenerators;

auto dual_cone(const Cone &c) -> Cone;

// Throws std::invalid_argument for a cone that is not pointed.
auto hilbert_basis(const Cone &c) -> IntMat;

// Maximal simplicial subcones (as index lists into `rays`) of a pulling
// triangulation that follows the order of `rays`.
auto triangulate(const IntMat &rays, std::size_t dim) -> std::vector<std::vector<std::size_t>>;

// Lattice points sum(l_i r_i), 0 <= l_i < 1, of a simplicial cone, in the lattice Z^d ∩ span.
auto parallelepiped_points(const IntMat &rays, std::size_t dim) -> IntMat;

// Value of a support function: `inf` marks the +infinity of an empty polyhedron.
struct ExtRat {
  Rat value;
  bool inf = false;
  [[nodiscard]] auto floor() const -> Int;
};

struct Polyhedron {
  std::size_t dim = 0;
  RatMat vertices;
  Cone tailcone;
  bool empty = false;
  // Optional H-representation; row (c, a) encodes c + a.x >= 0.
  IntMat hrep;

  static auto from_vertices(const RatMat &vertices, const Cone &tailcone) -> Polyhedron;
  static auto from_hrep(std::size_t dim, const IntMat &rows) -> Polyhedron;
  static auto empty_set(const Cone &tailcone) -> Polyhedron;

  [[nodiscard]] auto contains(const RatVec &x) const -> bool;
};

// min over vertices of <v,u>; +inf for the empty polyhedron. Throws
// std::domain_error when u is not in the dual of the tailcone.
auto support_value(const Polyhedron &p, const RatVec &u) -> ExtRat;
auto support_value(const Polyhedron &p, const IntVec &u) -> ExtRat;

// Minimal lattice points G of P with P ∩ Z^d = G + (c_dual ∩ Z^d).
auto module_generators(const Polyhedron &P, const Cone &c_dual) -> IntMat;

auto lex_sorted_unique(IntMat m) -> IntMat;

} // namespace tvar
