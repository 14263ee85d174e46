#pragma once

#include "tvar/projkit.hpp"

#include <json.hpp>

namespace tvar {

using Json = nlohmann::ordered_json;

// Input error located by a JSON pointer into the offending document.
class InputError : public std::runtime_error {
public:
  InputError(std::string pointer, const std::string &message)
      : std::runtime_error(pointer.empty() ? message : message + " at " + pointer), pointer_(std::move(pointer)) {}
  [[nodiscard]] auto pointer() const -> const std::string & { return pointer_; }

private:
  std::string pointer_;
};

auto read_json_file(const std::string &path) -> Json;

auto to_json(const Rat &r) -> Json;
auto to_json(const IntVec &v) -> Json;
auto to_json(const IntMat &m) -> Json;
auto to_json(const RatVec &v) -> Json;
auto to_json(const RatMat &m) -> Json;
auto to_json(const Cone &c) -> Json;
auto to_json(const Polyhedron &p) -> Json;
auto to_json(const XPolynomial &f) -> Json;
auto to_json(const PolyhedralDivisor &d) -> Json;
auto to_json(const Line &line) -> Json;
auto to_json(const SemiCanonicalEmbedding &e) -> Json;
auto to_json(const IdealPresentation &ideal, const std::vector<std::string> &names) -> Json;
auto to_json(const TropicalFan &f) -> Json;
auto to_json(const WellPoisedReport &r, const std::vector<std::string> &names) -> Json;
auto to_json(const HomogeneousValuation &v, std::size_t point_index) -> Json;
auto to_json(const KhovanskiiReport &r) -> Json;
auto to_json(const NOBody &b) -> Json;
auto to_json(const DegenerationFiber &f) -> Json;

// Parsers; errors carry the pointer of the offending field.
auto rat_from_json(const Json &j, const std::string &pointer) -> Rat;
auto int_vec_from_json(const Json &j, const std::string &pointer) -> IntVec;
auto int_mat_from_json(const Json &j, const std::string &pointer) -> IntMat;
auto xpolynomial_from_json(const Json &j, const std::string &pointer) -> XPolynomial;
auto divisor_from_json(const Json &j) -> PolyhedralDivisor;
auto line_from_json(const Json &j, const std::string &pointer = "") -> Line;
// {"psi", "point_index", "gamma"}; the point must be a boundary point of the line.
auto valuation_from_json(const Json &j, const Line &line) -> HomogeneousValuation;
// Divisor fields plus "grading_index".
auto polarized_from_json(const Json &j) -> PolarizedInput;

struct CustomInput {
  std::size_t rank_N = 0;
  Line line;
  CustomEmbedding embedding;
};
// {"rank_N", "line", "columns", "generators"}.
auto custom_from_json(const Json &j) -> CustomInput;

} // namespace tvar
