#pragma once

#include "tvar/tgeom.hpp"

#include <map>
#include <memory>
#include <string>

namespace tvar {

using Mono = std::vector<int>;

// Polynomial in x_1..x_n with rational coefficients; no zero coefficients stored.
struct XPolynomial {
  std::size_t nvars = 0;
  std::map<Mono, Rat> terms;

  static auto constant(std::size_t n, const Rat &c) -> XPolynomial;
  static auto variable(std::size_t n, std::size_t k) -> XPolynomial;
  static auto monomial(const Mono &a, const Rat &c = 1) -> XPolynomial;

  [[nodiscard]] auto total_degree() const -> int;
  [[nodiscard]] auto is_zero() const -> bool { return terms.empty(); }
  [[nodiscard]] auto is_monomial() const -> bool { return terms.size() == 1; }
  [[nodiscard]] auto operator-() const -> XPolynomial;
  [[nodiscard]] auto scaled(const Rat &c) const -> XPolynomial;
  [[nodiscard]] auto times_monomial(const Mono &a) const -> XPolynomial;
  // Replaces x_k by x_map[k] with factor sign[k].
  [[nodiscard]] auto relabeled(const std::vector<std::size_t> &map, const std::vector<Rat> &scale,
                               std::size_t new_n) const -> XPolynomial;
  // Coefficient of the term of highest total degree (lex largest) made 1.
  [[nodiscard]] auto monic() const -> XPolynomial;

  friend auto operator+(const XPolynomial &a, const XPolynomial &b) -> XPolynomial;
  friend auto operator-(const XPolynomial &a, const XPolynomial &b) -> XPolynomial;
  friend auto operator*(const XPolynomial &a, const XPolynomial &b) -> XPolynomial;
  friend auto operator==(const XPolynomial &, const XPolynomial &) -> bool = default;
};

// Canonical order: total degree, then terms.
auto poly_less(const XPolynomial &a, const XPolynomial &b) -> bool;
auto to_string(const XPolynomial &f, const std::vector<std::string> &names) -> std::string;
auto default_names(std::size_t n, int first_index = 1) -> std::vector<std::string>;

// Laurent polynomial in z_1..z_m times chi^u.
struct GradedLaurentElement {
  IntVec u;
  std::map<IntVec, Rat> terms;
  friend auto operator==(const GradedLaurentElement &, const GradedLaurentElement &) -> bool = default;
};

// Monomials of total degree <= d in n variables, graded then lex.
auto monomials_up_to(std::size_t n, int d) -> std::vector<Mono>;

// All alpha in N^n with sum alpha_k H[k] = target, via bounded search.
class SemigroupSolver {
public:
  explicit SemigroupSolver(IntMat H);
  [[nodiscard]] auto solutions(const IntVec &target) const -> std::vector<Mono>;
  // Minimal total degree, then lex least; nullopt if target is not in the semigroup.
  [[nodiscard]] auto min_lift(const IntVec &target) const -> std::optional<Mono>;
  [[nodiscard]] auto contains(const IntVec &target) const -> bool;
  [[nodiscard]] auto grading() const -> const IntVec & { return omega_; }

private:
  IntMat H_;
  IntVec omega_;
  Cone cone_;
  std::vector<Int> weights_;
  mutable std::map<std::pair<std::size_t, IntVec>, bool> reach_;
  [[nodiscard]] auto reachable(std::size_t k, const IntVec &rem) const -> bool;
};

struct ToricIdeal {
  std::vector<XPolynomial> generators;
  bool lattice_complete = true;
  std::string warning;
};

// Binomials x^a - x^b with H^T a = H^T b and total degree <= bound, minimalized.
auto toric_ideal_generators(const IntMat &H, int degree_bound) -> ToricIdeal;

// P = {(u,v) : v_i >= -Delta_i(u), sum v_i <= Delta_0(u) - 1, u in sigma dual}.
auto polytope_P(const PolyhedralDivisor &d) -> Polyhedron;

// Dehomogenized (by y_0) basis of the linear forms vanishing on the line, as Laurent polynomials in z.
auto line_linear_generators(const Line &line) -> std::vector<std::map<IntVec, Rat>>;

auto ideal_generators_IL(const SemiCanonicalEmbedding &e, const Line &line, const PolyhedralDivisor &d)
    -> std::vector<GradedLaurentElement>;

auto lift_to_polynomial(const GradedLaurentElement &g, const SemiCanonicalEmbedding &e) -> XPolynomial;
// x_k -> chi^{H_k}; keys are full (u, v) exponents.
auto substitute(const XPolynomial &f, const SemiCanonicalEmbedding &e) -> std::map<IntVec, Rat>;
auto as_character_sum(const GradedLaurentElement &g) -> std::map<IntVec, Rat>;

struct IdealPresentation {
  std::vector<XPolynomial> toric_generators;
  std::vector<XPolynomial> linear_lift_generators;
  int degree_bound = 6;
  bool toric_complete = true;
  std::string warning;

  [[nodiscard]] auto all() const -> std::vector<XPolynomial>;
};

auto ideal_presentation(const SemiCanonicalEmbedding &e, const Line &line, const PolyhedralDivisor &d,
                        int degree_bound) -> IdealPresentation;

struct GradedPiece {
  IntVec u;
  bool in_sigma_dual = false;
  std::vector<ExtRat> support; // Delta_i(u)
  IntVec floors;
  IntVec g_u;
  Int d_u = 0;
  std::size_t dim_AC = 0;
  std::size_t dim_IL = 0;
  std::size_t dim_AL = 0;
  [[nodiscard]] auto exact() const -> bool { return dim_AC == dim_IL + dim_AL; }
};

// Lattice points v with (u, v) in the dual of C (all coefficients must be nonempty).
auto cdual_fiber(const PolyhedralDivisor &d, const IntVec &u) -> IntMat;

auto graded_piece(const SemiCanonicalEmbedding &e, const Line &line, const PolyhedralDivisor &d, const IntVec &u)
    -> GradedPiece;

// Span of {m * g : deg(m * g) <= bound} with a lazily built echelon form per
// connected block of monomials.
class MacaulaySpace {
public:
  MacaulaySpace(const std::vector<XPolynomial> &gens, std::size_t nvars, int degree_bound);
  ~MacaulaySpace();
  MacaulaySpace(const MacaulaySpace &) = delete;
  auto operator=(const MacaulaySpace &) -> MacaulaySpace & = delete;
  [[nodiscard]] auto contains(const XPolynomial &f) const -> bool;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

auto ideal_membership(const XPolynomial &f, const std::vector<XPolynomial> &gens, int degree_bound) -> bool;

} // namespace tvar
