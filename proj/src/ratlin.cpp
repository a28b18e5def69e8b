#include "ratlin.hpp"

#include <algorithm>
#include <cctype>

namespace fseries {

std::string rat_str(const Rat& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Int parse_int(const std::string& s) {
  std::string t = s;
  // trim
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  if (t.empty()) throw engine_error("ConfigError", "empty integer literal");
  std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i == t.size()) throw engine_error("ConfigError", "bad integer literal '" + s + "'");
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw engine_error("ConfigError", "bad integer literal '" + s + "'");
  return Int(t);
}

Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  const Int num = parse_int(s.substr(0, slash));
  const Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw engine_error("ConfigError", "zero denominator in '" + s + "'");
  return Rat(num, den);
}

RatMat rat_identity(std::size_t n) {
  RatMat m(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat rat_transpose(const RatMat& a) {
  if (a.empty()) return {};
  RatMat t(a[0].size(), RatVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  RatMat c(n, RatVec(m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

RatVec rat_apply(const RatMat& a, const RatVec& v) {
  RatVec r(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

Rat rat_dot(const RatVec& v, const RatMat& gram, const RatVec& w) {
  Rat acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) acc += v[i] * gram[i][j] * w[j];
  }
  return acc;
}

Rat rat_det(const RatMat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  RatMat m = a;
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rat f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::vector<Rat> leading_principal_minors(const RatMat& a) {
  std::vector<Rat> minors;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    RatMat block(k, RatVec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block[i][j] = a[i][j];
    minors.push_back(rat_det(block));
  }
  return minors;
}

bool is_positive_definite(const RatMat& a, int* bad_minor) {
  const auto minors = leading_principal_minors(a);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    if (minors[k] <= 0) {
      if (bad_minor) *bad_minor = static_cast<int>(k + 1);
      return false;
    }
  }
  return true;
}

std::optional<RatMat> rat_inverse(const RatMat& a) {
  const std::size_t n = a.size();
  RatMat m = a;
  RatMat inv = rat_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rat p = m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] /= p;
      inv[col][c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rat f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  RatMat m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    m[i] = a[i];
    m[i].push_back(b[i]);
  }
  std::vector<int> pivot_col(rows, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const Rat p = m[rank][col];
    for (std::size_t c = col; c <= cols; ++c) m[rank][c] /= p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rat f = m[r][col];
      for (std::size_t c = col; c <= cols; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = m[r][cols];
  return x;
}

Int rat_floor(const Rat& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);  // > 0
  if (num >= 0) return num / den;
  return -((-num + den - 1) / den);
}

Int isqrt_floor(const Int& n) {
  if (n < 0) throw engine_error("Internal", "isqrt of negative value");
  return sqrt(n);  // boost cpp_int sqrt is the integer floor
}

namespace {

// Hermite normal form by integer column operations; returns column echelon
// generators of the same lattice.
std::vector<std::vector<Int>> hnf_columns(std::vector<std::vector<Int>> cols, std::size_t dim) {
  std::size_t col_start = 0;
  for (std::size_t row = 0; row < dim && col_start < cols.size(); ++row) {
    // gcd out everything in this row across columns >= col_start
    while (true) {
      std::size_t nz = cols.size();
      for (std::size_t c = col_start; c < cols.size(); ++c)
        if (cols[c][row] != 0) {
          nz = c;
          break;
        }
      if (nz == cols.size()) break;  // row identically zero
      // find a second nonzero to reduce
      std::size_t other = cols.size();
      for (std::size_t c = nz + 1; c < cols.size(); ++c)
        if (cols[c][row] != 0) {
          other = c;
          break;
        }
      if (other == cols.size()) {
        std::swap(cols[col_start], cols[nz]);
        if (cols[col_start][row] < 0)
          for (auto& x : cols[col_start]) x = -x;
        ++col_start;
        break;
      }
      // reduce the larger entry by the smaller
      if (abs(cols[nz][row]) > abs(cols[other][row])) std::swap(cols[nz], cols[other]);
      const Int q = cols[other][row] / cols[nz][row];
      for (std::size_t i = 0; i < dim; ++i) cols[other][i] -= q * cols[nz][i];
    }
  }
  return cols;
}

}  // namespace

bool in_lattice(const std::vector<RatVec>& gens, const RatVec& v) {
  const std::size_t dim = v.size();
  // clear denominators jointly
  Int scale = 1;
  auto fold = [&scale](const RatVec& w) {
    for (const Rat& x : w) scale = lcm(scale, denominator(x));
  };
  for (const auto& g : gens) fold(g);
  fold(v);
  std::vector<std::vector<Int>> cols;
  for (const auto& g : gens) {
    std::vector<Int> c(dim);
    for (std::size_t i = 0; i < dim; ++i) c[i] = numerator(Rat(g[i] * scale));
    cols.push_back(std::move(c));
  }
  std::vector<Int> target(dim);
  for (std::size_t i = 0; i < dim; ++i) target[i] = numerator(Rat(v[i] * scale));

  const auto h = hnf_columns(std::move(cols), dim);
  std::vector<Int> rem = target;
  for (const auto& col : h) {
    std::size_t lead = dim;
    for (std::size_t i = 0; i < dim; ++i)
      if (col[i] != 0) {
        lead = i;
        break;
      }
    if (lead == dim) continue;
    if (rem[lead] % col[lead] != 0) continue;  // cannot use this pivot exactly
    const Int q = rem[lead] / col[lead];
    for (std::size_t i = 0; i < dim; ++i) rem[i] -= q * col[i];
  }
  for (const Int& x : rem)
    if (x != 0) return false;
  return true;
}

}  // namespace fseries
