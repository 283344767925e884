#include "coxdesc/linalg.hpp"

#include <algorithm>

#include "coxdesc/errors.hpp"

namespace coxdesc {

namespace {

std::size_t width(const RationalMatrix& m) { return m.empty() ? 0 : m.front().size(); }

void check_rectangular(const RationalMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != width(m)) throw InvalidArgument("ragged matrix");
  }
}

}  // namespace

int rank(const RationalMatrix& rows) {
  check_rectangular(rows);
  const std::size_t cols = width(rows);
  std::vector<std::vector<BigInt>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    BigInt l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<BigInt> r;
    r.reserve(cols);
    for (const auto& q : row) r.push_back(q.get_num() * (l / q.get_den()));
    a.push_back(std::move(r));
  }
  int r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < a.size(); ++c) {
    const auto ri = static_cast<std::size_t>(r);
    std::size_t p = ri;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[ri], a[p]);
    for (std::size_t i = ri + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[ri][c] * a[i][j] - a[i][c] * a[ri][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[ri][c];
    ++r;
  }
  return r;
}

RationalMatrix rref(RationalMatrix m, std::vector<int>* pivots) {
  check_rectangular(m);
  const std::size_t cols = width(m);
  std::vector<int> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw InvalidArgument("right-hand side has the wrong length");
  check_rectangular(a);
  const std::size_t n = width(a);
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  std::vector<int> pivots;
  aug = rref(std::move(aug), &pivots);
  if (!pivots.empty() && static_cast<std::size_t>(pivots.back()) == n) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[static_cast<std::size_t>(pivots[i])] = aug[i][n];
  return x;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  check_rectangular(m);
  if (width(m) != n) throw InvalidArgument("inverse of a non-square matrix");
  RationalMatrix aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n);
    aug[i][n + i] = 1;
  }
  std::vector<int> pivots;
  aug = rref(std::move(aug), &pivots);
  if (pivots.size() < n || static_cast<std::size_t>(pivots[n - 1]) != n - 1) {
    throw InvalidArgument("matrix is singular");
  }
  RationalMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(aug[i].begin() + static_cast<long>(n), aug[i].end());
  return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t inner = width(a);
  if (inner != b.size()) throw InvalidArgument("matrix shapes do not match");
  const std::size_t cols = width(b);
  RationalMatrix c(a.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

}  // namespace coxdesc
