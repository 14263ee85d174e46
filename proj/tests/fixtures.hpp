#pragma once

#include "tvar/json_io.hpp"

namespace fx {

using namespace tvar;

inline auto d6() -> PolyhedralDivisor {
  return PolyhedralDivisor::make(1, {{1}}, {{0, 1}, {1, 1}, {1, 0}},
                                 {RatMat{{Rat(3, 2)}}, RatMat{{Rat(-1, 2)}}, RatMat{{Rat(-1, 2)}}});
}

inline auto pomega() -> PolyhedralDivisor {
  return PolyhedralDivisor::make(3, {{1, 0, 1}, {1, 1, 1}, {0, 1, 1}, {0, -1, 1}, {-1, -1, 1}, {-1, 0, 1}},
                                 {{0, 1}, {1, 1}, {1, 0}},
                                 {RatMat{{1, 0, 0}, {0, 0, 0}}, RatMat{{0, 1, 0}, {0, 0, 0}},
                                  RatMat{{0, 0, 1}, {-1, -1, 1}}});
}

// D6 hand-supplied embedding in three variables.
inline auto d6_minimal() -> CustomEmbedding {
  CustomEmbedding c;
  c.columns = {{3, 2, 2}, {2, 1, 2}, {2, 2, 1}};
  c.generators = {XPolynomial::monomial({2, 0, 0}) + XPolynomial::monomial({0, 2, 1}) +
                  XPolynomial::monomial({0, 1, 2})};
  return c;
}

inline auto poly(std::size_t n, const std::vector<std::pair<Mono, Rat>> &terms) -> XPolynomial {
  XPolynomial f;
  f.nvars = n;
  for (const auto &[a, c] : terms) f = f + XPolynomial::monomial(a, c);
  return f;
}

inline auto data(const std::string &name) -> std::string { return std::string(TVAR_DATA_DIR) + "/" + name; }

} // namespace fx
