#pragma once

#include "tvar/idealkit.hpp"

namespace tvar {

struct TropicalLine {
  IntMat rays;                          // primitive, one per boundary point
  std::vector<Int> weights;             // lattice length of the ord table
  std::vector<std::size_t> coincidence; // forms vanishing at the point
  [[nodiscard]] auto balanced() const -> bool;
};

auto trop_line(const Line &line) -> TropicalLine;

// w_k = <v, H_k>.
auto phi(const SemiCanonicalEmbedding &e, const IntVec &v) -> IntVec;

struct TropicalFan {
  std::size_t ambient = 0;
  IntMat lineality;  // phi of the N basis
  IntMat line_rays;  // rays of the tropical line
  IntMat cone_rays;  // phi(0, ray)
  std::size_t lineality_dim = 0;
};

auto trop_X(const SemiCanonicalEmbedding &e, const Line &line) -> TropicalFan;

// Terms of f with alpha.w minimal.
auto initial_form(const XPolynomial &f, const IntVec &w) -> XPolynomial;

// Minimal-support relations of the line (integral, first nonzero entry positive).
auto line_circuits(const Line &line) -> IntMat;

// Line cut out by the initial forms, for the weight (0, vz) on y_0..y_m. Throws
// std::domain_error when some initial form is a monomial.
auto degenerate_line(const Line &line, const IntVec &vz) -> Line;

struct ConeReport {
  std::size_t index = 0;
  IntVec ray;
  IntVec weight;
  std::vector<XPolynomial> initial_gens;
  std::vector<XPolynomial> degenerate_gens;
  bool monomial_free = true;
  bool initial_in_degenerate = true;
  bool degenerate_in_initial = true;
  bool match = true;
  std::string witness;
};

struct WellPoisedReport {
  std::vector<ConeReport> cones;
  bool well_poised = true;
  int degree_bound = 6;
};

auto verify_well_poised(const SemiCanonicalEmbedding &e, const Line &line, const PolyhedralDivisor &d,
                        int degree_bound) -> WellPoisedReport;

// An embedding given by hand: variable k has degree columns[k] in M x Z^m.
struct CustomEmbedding {
  IntMat columns;
  std::vector<XPolynomial> generators;
};

auto phi(const CustomEmbedding &c, const IntVec &v) -> IntVec;

// Per cone: monomial-freeness of the initial generators and a search for a
// factorization x_i * h in the initial ideal with neither factor in it.
auto verify_well_poised(const CustomEmbedding &c, const Line &line, std::size_t rank_N, int degree_bound)
    -> WellPoisedReport;

struct IteratedInitial {
  std::vector<XPolynomial> generators;
  bool monomial = false;
  std::optional<std::size_t> monomial_row;
};

// Applies the rows of W in order to the fixed generator set.
auto iterated_initial(const std::vector<XPolynomial> &gens, const IntMat &W) -> IteratedInitial;

} // namespace tvar
