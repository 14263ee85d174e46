#include "tvar/exactla.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace tvar {

auto parse_rat(std::string_view s) -> Rat {
  static const std::regex pat(R"(\s*([+-]?[0-9]+)(?:/([0-9]+))?\s*)");
  std::string str(s);
  std::smatch m;
  if (!std::regex_match(str, m, pat))
    throw std::invalid_argument("malformed rational \"" + str + "\"");
  Int num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  Int den(1);
  if (m[2].matched) {
    den = Int(m[2].str());
    if (den == 0) throw std::invalid_argument("malformed rational \"" + str + "\" (zero denominator)");
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

auto to_string(const Rat &r) -> std::string {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

auto to_string(const Int &z) -> std::string { return z.get_str(); }

auto floor_rat(const Rat &r) -> Int {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

auto ceil_rat(const Rat &r) -> Int {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

auto is_integral(const Rat &r) -> bool { return r.get_den() == 1; }

auto to_rat(const IntVec &v) -> RatVec { return RatVec(v.begin(), v.end()); }

auto to_rat(const IntMat &m) -> RatMat {
  RatMat out;
  out.reserve(m.size());
  for (const auto &row : m) out.push_back(to_rat(row));
  return out;
}

auto identity_int(std::size_t n) -> IntMat {
  IntMat I(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

auto transpose(const IntMat &m, std::size_t ncols) -> IntMat {
  IntMat t(ncols, IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = m[i][j];
  return t;
}

auto transpose(const RatMat &m, std::size_t ncols) -> RatMat {
  RatMat t(ncols, RatVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = m[i][j];
  return t;
}

auto dot(const IntVec &a, const IntVec &b) -> Int {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

auto dot(const RatVec &a, const RatVec &b) -> Rat {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

auto dot(const RatVec &a, const IntVec &b) -> Rat {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

auto mat_vec(const IntMat &m, const IntVec &v) -> IntVec {
  IntVec out;
  out.reserve(m.size());
  for (const auto &row : m) out.push_back(dot(row, v));
  return out;
}

auto mat_mul(const IntMat &a, const IntMat &b, std::size_t bcols) -> IntMat {
  IntMat out(a.size(), IntVec(bcols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < bcols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

auto vec_gcd(const IntVec &v) -> Int {
  Int g = 0;
  for (const auto &x : v) g = gcd(g, x);
  return g;
}

auto primitive(const IntVec &v) -> IntVec {
  Int g = vec_gcd(v);
  if (g == 0 || g == 1) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

auto primitive(const RatVec &v) -> IntVec {
  Int l = 1;
  for (const auto &x : v) l = lcm(l, Int(x.get_den()));
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * l;
    out[i] = s.get_num();
  }
  return primitive(out);
}

auto is_zero(const IntVec &v) -> bool {
  return std::all_of(v.begin(), v.end(), [](const Int &x) { return x == 0; });
}

auto is_zero(const RatVec &v) -> bool {
  return std::all_of(v.begin(), v.end(), [](const Rat &x) { return x == 0; });
}

namespace {

void row_axpy(IntVec &dst, const Int &q, const IntVec &src) {
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

} // namespace

auto hermite_normal_form(const IntMat &A, std::size_t ncols) -> HermiteResult {
  const std::size_t m = A.size();
  IntMat H = A;
  IntMat U = identity_int(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m; ++c) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (H[i][c] != 0 && (best == m || abs(H[i][c]) < abs(H[best][c]))) best = i;
      if (best == m) break;
      std::swap(H[r], H[best]);
      std::swap(U[r], U[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), H[i][c].get_mpz_t(), H[r][c].get_mpz_t());
        row_axpy(H[i], q, H[r]);
        row_axpy(U[i], q, U[r]);
        if (H[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (H[r][c] == 0) continue;
    if (H[r][c] < 0) {
      for (auto &x : H[r]) x = -x;
      for (auto &x : U[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H[i][c].get_mpz_t(), H[r][c].get_mpz_t());
      if (q == 0) continue;
      row_axpy(H[i], q, H[r]);
      row_axpy(U[i], q, U[r]);
    }
    ++r;
  }
  return {std::move(H), std::move(U), r};
}

auto hermite_normal_form(const IntMat &A) -> HermiteResult {
  return hermite_normal_form(A, A.empty() ? 0 : A.front().size());
}

auto determinant(const RatMat &A) -> Rat {
  const std::size_t n = A.size();
  RatMat M = A;
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(M[p], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (M[i][c] == 0) continue;
      Rat f = M[i][c] / M[c][c];
      for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[c][j];
    }
  }
  return det;
}

auto determinant(const IntMat &A) -> Int {
  Rat d = determinant(to_rat(A));
  return d.get_num();
}

auto integer_kernel(const IntMat &A, std::size_t ncols) -> IntMat {
  auto hr = hermite_normal_form(transpose(A, ncols), A.size());
  IntMat K(hr.U.begin() + static_cast<std::ptrdiff_t>(hr.rank), hr.U.end());
  if (K.empty()) return K;
  auto canon = hermite_normal_form(K, ncols);
  canon.H.resize(canon.rank);
  return canon.H;
}

auto integer_kernel(const IntMat &A) -> IntMat {
  if (A.empty()) throw std::invalid_argument("integer_kernel: column count unknown for empty matrix");
  return integer_kernel(A, A.front().size());
}

auto rref(RatMat &A, std::size_t ncols) -> std::vector<std::size_t> {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < A.size(); ++c) {
    std::size_t p = r;
    while (p < A.size() && A[p][c] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[r]);
    Rat inv = 1 / A[r][c];
    for (std::size_t j = c; j < ncols; ++j) A[r][j] *= inv;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (std::size_t j = c; j < ncols; ++j) A[i][j] -= f * A[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

auto rank(const RatMat &A, std::size_t ncols) -> std::size_t {
  RatMat M = A;
  return rref(M, ncols).size();
}

auto rank(const IntMat &A, std::size_t ncols) -> std::size_t { return rank(to_rat(A), ncols); }

auto rank(const IntMat &A) -> std::size_t {
  if (A.empty()) return 0;
  return rank(A, A.front().size());
}

auto rational_kernel(const RatMat &A, std::size_t ncols) -> RatMat {
  RatMat M = A;
  auto piv = rref(M, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (auto p : piv) is_piv[p] = true;
  RatMat basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    RatVec x(ncols, 0);
    x[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -M[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

auto rational_solve(const RatMat &A, const RatVec &b, std::size_t ncols) -> std::optional<RatVec> {
  if (A.size() != b.size()) throw std::invalid_argument("rational_solve: dimension mismatch");
  for (const auto &row : A)
    if (row.size() != ncols) throw std::invalid_argument("rational_solve: ragged matrix");
  RatMat M = A;
  for (std::size_t i = 0; i < M.size(); ++i) M[i].push_back(b[i]);
  auto piv = rref(M, ncols + 1);
  if (!piv.empty() && piv.back() == ncols) return std::nullopt;
  RatVec x(ncols, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = M[r][ncols];
  return x;
}

auto rational_solve(const RatMat &A, const RatVec &b) -> std::optional<RatVec> {
  if (A.empty()) {
    if (!b.empty()) throw std::invalid_argument("rational_solve: dimension mismatch");
    return RatVec{};
  }
  return rational_solve(A, b, A.front().size());
}

auto in_lattice(const IntMat &B, const IntVec &v) -> bool {
  if (B.empty()) return is_zero(v);
  auto hr = hermite_normal_form(B, v.size());
  IntVec w = v;
  for (std::size_t i = 0; i < hr.rank; ++i) {
    const auto &row = hr.H[i];
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    if (w[p] % row[p] != 0) return false;
    Int q = w[p] / row[p];
    row_axpy(w, q, row);
  }
  return is_zero(w);
}

} // namespace tvar
