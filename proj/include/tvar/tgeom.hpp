#pragma once

#include "tvar/polycore.hpp"

#include <optional>
#include <string>
#include <utility>

namespace tvar {

// A point (a:b) of P^1; the linear form b*s0 - a*s1 vanishes exactly there.
struct ProjPoint {
  Rat a;
  Rat b;
  // Representative (a/b : 1), or (1 : 0).
  [[nodiscard]] auto normalized() const -> ProjPoint;
  friend auto operator==(const ProjPoint &, const ProjPoint &) -> bool = default;
};
auto same_point(const ProjPoint &p, const ProjPoint &q) -> bool;

struct PolyhedralDivisor {
  std::size_t rank_N = 0;
  Cone tailcone;
  std::vector<ProjPoint> points;
  std::vector<Polyhedron> coefficients;

  [[nodiscard]] auto m() const -> std::size_t { return points.size() - 1; }

  // Validates and canonicalizes. Throws std::invalid_argument with
  // "points must be distinct", "tailcone mismatch", ... on bad data.
  static auto make(std::size_t rank_N, const IntMat &tailcone_rays, const std::vector<ProjPoint> &points,
                   const std::vector<std::optional<RatMat>> &coefficient_vertices) -> PolyhedralDivisor;
};

struct BoundaryPoint {
  ProjPoint param;
  IntVec ord;                       // ord_Q(z_1..z_m)
  std::vector<std::size_t> indices; // i with l_i(Q) = 0
};

// Parametrized line: form i is coeff[0]*s0 + coeff[1]*s1.
struct Line {
  std::vector<std::pair<Rat, Rat>> forms;
  std::vector<BoundaryPoint> boundary;

  [[nodiscard]] auto m() const -> std::size_t { return forms.size() - 1; }
  // Basis (reduced echelon, primitive integral rows) of the linear forms in
  // y_0..y_m vanishing on the line.
  [[nodiscard]] auto relations() const -> IntMat;
  // Index of the boundary point at q, if any.
  [[nodiscard]] auto boundary_index(const ProjPoint &q) const -> std::optional<std::size_t>;

  // Throws std::invalid_argument if some form vanishes identically or all are proportional.
  static auto from_forms(const std::vector<std::pair<Rat, Rat>> &forms) -> Line;
};

auto line_from_divisor(const PolyhedralDivisor &d) -> Line;

// Cone over {vertices of Delta_i} x e_i together with sigma x 0, e_0 = -(e_1+...+e_m).
auto build_cone_C(const PolyhedralDivisor &d) -> Cone;

struct SemiCanonicalEmbedding {
  std::size_t rank_N = 0;
  std::size_t m = 0;
  Cone cone_C;
  Cone dual_C;
  IntMat H; // lex sorted; variable x_{k+1} has degree H[k]

  [[nodiscard]] auto n() const -> std::size_t { return H.size(); }
  [[nodiscard]] auto ambient() const -> std::size_t { return rank_N + m; }
};

auto build_embedding(const PolyhedralDivisor &d) -> SemiCanonicalEmbedding;

struct Admissibility {
  bool admissible = true;
  std::optional<std::size_t> point; // failing boundary index
  IntVec u;                         // witness degree
};

// Normality test for the pairing of coefficients with a line's boundary points.
auto check_admissible(const std::vector<Polyhedron> &coefficients, const Cone &sigma, const Line &line)
    -> Admissibility;
auto check_admissible(const PolyhedralDivisor &d) -> Admissibility;
// Same test with explicit groups of coinciding coefficient indices.
auto check_admissible_groups(const std::vector<Polyhedron> &coefficients, const Cone &sigma,
                             const std::vector<std::vector<std::size_t>> &groups) -> Admissibility;

auto detect_toric(const Line &line) -> bool;

// Message if the degree sum of the coefficients is not a proper subset of sigma.
auto properness_warning(const PolyhedralDivisor &d) -> std::optional<std::string>;

// Right-hand side of the dual-cone identity: v_i >= -Delta_i(u) (i >= 1),
// sum v_i <= Delta_0(u), u in sigma dual.
auto satisfies_cdual_inequalities(const PolyhedralDivisor &d, const IntVec &u, const IntVec &v) -> bool;

} // namespace tvar
