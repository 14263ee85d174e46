#pragma once

#include "tvar/valkit.hpp"

namespace tvar {

// Divisor on N x Z (as one lattice of rank rank_N) whose coordinate t is the
// grading co-character.
struct PolarizedInput {
  PolyhedralDivisor divisor;
  std::size_t grading_index = 0;

  // Throws std::invalid_argument unless e_t lies in the interior of the tailcone.
  static auto make(PolyhedralDivisor d, std::size_t grading_index) -> PolarizedInput;
  [[nodiscard]] auto rank_M() const -> std::size_t { return divisor.rank_N - 1; }
  // (u' with 1 inserted at the grading index), scaled by k.
  [[nodiscard]] auto lift(const IntVec &u, const Int &k) const -> IntVec;
  [[nodiscard]] auto lift(const RatVec &u, const Rat &k) const -> RatVec;
};

// Box_D = {u : (1, u) in the dual of the tailcone}, rows (c, a) meaning c + a.u >= 0.
auto box_inequalities(const PolarizedInput &p) -> IntMat;

// Lattice points u of sigma dual with grading coordinate 0 < u_t <= bound, plus u = 0.
auto graded_points(const PolarizedInput &p, int bound) -> IntMat;

// Vertices of {x : c + a.x >= 0} by intersecting dim-subsets of the rows; the
// set must be bounded. Lex sorted.
auto vertices_from_hrep(const IntMat &rows, std::size_t dim) -> RatMat;

struct NOBody {
  std::size_t point_index = 0;
  IntMat preimage_inequalities; // over (u, lambda); rows (c, a)
  RatMat preimage_vertices;
  IntMat rho;                   // r x (rank M + 1)
  RatMat vertices;              // rho of the preimage vertices
  IntMat inequalities;          // image H-representation when rho is square, else empty
};

// Throws std::invalid_argument when rho is not injective and std::domain_error
// when Box_D is empty or the body is unbounded.
auto nok_body(const PolarizedInput &p, const Line &line, std::size_t j, const IntMat &psi, const IntVec &gamma)
    -> NOBody;

// Lattice points of k times the preimage polytope.
auto count_dilation_points(const NOBody &body, int k) -> std::size_t;

// Sum of dim A(L)_u over the degree-k slice.
auto section_count(const PolarizedInput &p, const Line &line, int k) -> std::size_t;

// Generators are preserved setwise by a lattice isomorphism of the generated
// groups that fixes the grading coordinate.
auto lattice_equivalent(const IntMat &s1, const IntMat &s2, std::size_t grading_index) -> bool;

struct DegenerationFiber {
  std::string label; // "trivial", "S_j", or "interior-point"
  std::optional<std::size_t> point_index;
  IntMat generators; // (u, v) in M x Z x Z, up to the degree bound
  std::vector<XPolynomial> ideal_generators;
  bool normal = true;
  bool ideal_complete = true;
  std::vector<std::string> merged; // labels found isomorphic to this one
};

// Semigroup of Thm-style fibers, lower/upper bounds in v over u.
auto fiber_contains(const PolarizedInput &p, const Line &line, std::optional<std::size_t> j, const IntVec &uv)
    -> bool;

auto fiber_generators(const PolarizedInput &p, const Line &line, std::optional<std::size_t> j, int degree_bound)
    -> IntMat;

// Trivial marker first, then one fiber per isomorphism class.
auto test_config_fibers(const PolarizedInput &p, const Line &line, int degree_bound = 4)
    -> std::vector<DegenerationFiber>;

} // namespace tvar
