#pragma once

#include "tvar/tropkit.hpp"

namespace tvar {

// f * chi^u -> psi(u) + ord_Q(f) * gamma, compared lexicographically in Z^r.
struct HomogeneousValuation {
  IntMat psi; // r x rank M
  ProjPoint point;
  IntVec gamma;

  [[nodiscard]] auto r() const -> std::size_t { return gamma.size(); }
  [[nodiscard]] auto rank_M() const -> std::size_t;
  [[nodiscard]] auto full_rank() const -> bool;

  // Valuation at the boundary point j of the line.
  static auto at_boundary(const Line &line, std::size_t j, IntMat psi, IntVec gamma) -> HomogeneousValuation;
};

auto lex_nonnegative(const IntVec &v) -> bool;
auto lex_less(const IntVec &a, const IntVec &b) -> bool;

// Order of vanishing at Q of the Laurent polynomial f in z_i = l_i / l_0 restricted
// to the line; nullopt when f vanishes on the line.
auto ord_at(const Line &line, const ProjPoint &Q, const std::map<IntVec, Rat> &f) -> std::optional<Int>;

// Throws std::domain_error when g restricts to zero on the line.
auto valuation_eval(const HomogeneousValuation &val, const Line &line, const GradedLaurentElement &g) -> IntVec;

// Value of each semi-canonical generator x_k, in variable order.
auto generator_values(const SemiCanonicalEmbedding &e, const Line &line, const HomogeneousValuation &val) -> IntMat;

// Lattice points u of the dual of the tailcone with deg(u) <= bound, where deg
// pairs with the primitive sum of the tailcone rays (box |u_i| <= bound when
// the tailcone is zero).
auto sigma_dual_points(const Cone &tailcone, int bound) -> IntMat;
// Same with an explicit degree, which must be positive on the nonzero points of the dual.
auto sigma_dual_points(const Cone &tailcone, int bound, const IntVec &degree) -> IntMat;
auto sigma_degree(const Cone &tailcone) -> IntVec;

struct LambdaRange {
  std::optional<Int> lo; // nullopt: unbounded
  std::optional<Int> hi;
  [[nodiscard]] auto empty() const -> bool { return lo && hi && *lo > *hi; }
  [[nodiscard]] auto contains(const Int &x) const -> bool { return (!lo || *lo <= x) && (!hi || x <= *hi); }
};

// Floors are summed over the forms vanishing at the boundary point.
auto lambda_range(const PolyhedralDivisor &d, const Line &line, std::size_t j, const IntVec &u)
    -> std::optional<LambdaRange>;

class ValueSemigroup {
public:
  ValueSemigroup(const SemiCanonicalEmbedding &e, const Line &line, const PolyhedralDivisor &d,
                 HomogeneousValuation val);

  [[nodiscard]] auto point_index() const -> std::size_t { return j_; }
  [[nodiscard]] auto variable_values() const -> const IntMat & { return values_; }
  // Distinct nonzero generator values, lex sorted.
  [[nodiscard]] auto generators() const -> const IntMat & { return gens_; }
  [[nodiscard]] auto region(const IntVec &u) const -> std::optional<LambdaRange>;
  [[nodiscard]] auto rho(const IntVec &u, const Int &lambda) const -> IntVec;
  // Via rho-preimages in the region; exact when rho is injective, otherwise u
  // is searched in the degree window of sigma_dual_points(search_bound).
  [[nodiscard]] auto contains(const IntVec &q, int search_bound = 10) const -> bool;
  // Via nonnegative integer combinations of the generator values.
  [[nodiscard]] auto generated(const IntVec &q) const -> bool;
  [[nodiscard]] auto valuation() const -> const HomogeneousValuation & { return val_; }

private:
  PolyhedralDivisor d_;
  Line line_;
  HomogeneousValuation val_;
  std::size_t j_ = 0;
  IntMat values_;
  IntMat gens_;
  std::shared_ptr<SemigroupSolver> solver_;
};

struct GridPoint {
  IntVec q;
  bool member = false;
};

// Rank-2 targets only.
auto membership_grid(const ValueSemigroup &s, const Int &umin, const Int &umax, const Int &vmin, const Int &vmax)
    -> std::vector<GridPoint>;

struct KhovanskiiWitness {
  IntVec u;
  IntVec exponent; // z-exponent of the basis element g_u * z_k^a
  IntVec value;
  std::string reason;
};

struct KhovanskiiReport {
  bool passed = true;
  std::size_t degrees = 0;
  std::size_t elements = 0;
  std::optional<KhovanskiiWitness> witness;
};

// For each u in sigma_dual_points(degree_bound): the basis g_u * z_k^a (a = 0..d_u)
// of A(L)_u with z_k a coordinate adapted to Q, valued exactly on the line.
// Checks that each value lies in the semigroup generated by the generator
// values, that the values are pairwise distinct, and that they fill rho of the
// region slice. Throws std::invalid_argument when Q is not a boundary point.
auto khovanskii_check(const SemiCanonicalEmbedding &e, const Line &line, const PolyhedralDivisor &d,
                      const HomogeneousValuation &val, int degree_bound) -> KhovanskiiReport;

struct WeightMatrixReport {
  IntMat W; // r x n, columns are generator values
  IteratedInitial iterated;
  bool in_trop_r = false;
  std::optional<std::size_t> active_row; // first row with gamma_i != 0
  std::optional<std::size_t> active_cone;
  bool cone_matches = false;       // active_cone is the valuation's point
  bool initial_matches_cone = false; // In_row(J) = In_{C_j}(J) to the degree bound
};

// Throws std::invalid_argument when the valuation is not of full rank.
auto weight_matrix_from_valuation(const SemiCanonicalEmbedding &e, const Line &line, const PolyhedralDivisor &d,
                                  const HomogeneousValuation &val, int degree_bound) -> WeightMatrixReport;

} // namespace tvar
