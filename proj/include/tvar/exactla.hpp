#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tvar {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// "p/q" or "p"; throws std::invalid_argument("malformed rational ...") otherwise.
auto parse_rat(std::string_view s) -> Rat;
auto to_string(const Rat &r) -> std::string;
auto to_string(const Int &z) -> std::string;

auto floor_rat(const Rat &r) -> Int;
auto ceil_rat(const Rat &r) -> Int;
auto is_integral(const Rat &r) -> bool;

auto to_rat(const IntVec &v) -> RatVec;
auto to_rat(const IntMat &m) -> RatMat;
auto identity_int(std::size_t n) -> IntMat;
auto transpose(const IntMat &m, std::size_t ncols) -> IntMat;
auto transpose(const RatMat &m, std::size_t ncols) -> RatMat;

auto dot(const IntVec &a, const IntVec &b) -> Int;
auto dot(const RatVec &a, const RatVec &b) -> Rat;
auto dot(const RatVec &a, const IntVec &b) -> Rat;
auto mat_vec(const IntMat &m, const IntVec &v) -> IntVec;
auto mat_mul(const IntMat &a, const IntMat &b, std::size_t bcols) -> IntMat;

auto vec_gcd(const IntVec &v) -> Int;
// Divides by the gcd of the entries; zero stays zero.
auto primitive(const IntVec &v) -> IntVec;
// Smallest positive multiple of a rational vector that is integral, then made primitive.
auto primitive(const RatVec &v) -> IntVec;
auto is_zero(const IntVec &v) -> bool;
auto is_zero(const RatVec &v) -> bool;

// Row-style Hermite normal form: H = U*A, rows of H echelon, pivots positive,
// entries above each pivot reduced into [0, pivot). Zero rows sit at the bottom.
struct HermiteResult {
  IntMat H;
  IntMat U;
  std::size_t rank = 0;
};
auto hermite_normal_form(const IntMat &A, std::size_t ncols) -> HermiteResult;
auto hermite_normal_form(const IntMat &A) -> HermiteResult;

auto determinant(const IntMat &A) -> Int;
auto determinant(const RatMat &A) -> Rat;

// Basis rows of the saturated lattice {x in Z^n : A x = 0}, in Hermite normal form.
auto integer_kernel(const IntMat &A, std::size_t ncols) -> IntMat;
auto integer_kernel(const IntMat &A) -> IntMat;

// Reduced row echelon form; returns pivot columns.
auto rref(RatMat &A, std::size_t ncols) -> std::vector<std::size_t>;
auto rank(const RatMat &A, std::size_t ncols) -> std::size_t;
auto rank(const IntMat &A, std::size_t ncols) -> std::size_t;
auto rank(const IntMat &A) -> std::size_t;
// Basis of {x : A x = 0} over Q, one vector per free column.
auto rational_kernel(const RatMat &A, std::size_t ncols) -> RatMat;

// Throws std::invalid_argument on dimension mismatch; nullopt when inconsistent.
auto rational_solve(const RatMat &A, const RatVec &b, std::size_t ncols) -> std::optional<RatVec>;
auto rational_solve(const RatMat &A, const RatVec &b) -> std::optional<RatVec>;

// True iff v lies in the Z-row-span of the basis rows B.
auto in_lattice(const IntMat &B, const IntVec &v) -> bool;

} // namespace tvar
