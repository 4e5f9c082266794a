#include "trigdunkl/exactlin.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "trigdunkl/errors.hpp"

namespace trigdunkl {

double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::vector<double> to_double(const RatVec& v) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const Rat& c, const RatVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r == 0; });
}

bool is_integral(const Rat& r) { return r.denominator() == 1; }

bool is_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& r) { return is_integral(r); });
}

RatVec mat_vec(const RatMat& A, const RatVec& x) {
  RatVec out(A.size());
  for (size_t i = 0; i < A.size(); ++i) out[i] = dot(A[i], x);
  return out;
}

RatMat transpose(const RatMat& A) {
  if (A.empty()) return {};
  RatMat out(A[0].size(), RatVec(A.size()));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < A[i].size(); ++j) out[j][i] = A[i][j];
  return out;
}

LinearSolution solve_linear(RatMat A, RatVec b) {
  const size_t m = A.size();
  const size_t n = m ? A[0].size() : 0;
  std::vector<int> pivot_col;  // pivot_col[r] = column of pivot in row r
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t p = row;
    while (p < m && A[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(A[p], A[row]);
    std::swap(b[p], b[row]);
    const Rat inv = Rat(1) / A[row][col];
    for (size_t j = col; j < n; ++j) A[row][j] *= inv;
    b[row] *= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == row || A[r][col] == 0) continue;
      const Rat f = A[r][col];
      for (size_t j = col; j < n; ++j) A[r][j] -= f * A[row][j];
      b[r] -= f * b[row];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  LinearSolution sol;
  for (size_t r = row; r < m; ++r)
    if (b[r] != 0) return sol;  // inconsistent
  sol.consistent = true;
  sol.particular.assign(n, Rat(0));
  for (size_t r = 0; r < pivot_col.size(); ++r) sol.particular[pivot_col[r]] = b[r];
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(n, Rat(0));
    v[free_col] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -A[r][free_col];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

int rank(RatMat A) {
  const size_t m = A.size();
  const size_t n = m ? A[0].size() : 0;
  RatVec zero(m, Rat(0));
  LinearSolution sol = solve_linear(std::move(A), std::move(zero));
  return static_cast<int>(n - sol.nullspace.size());
}

IntMat integer_rows(const RatMat& A) {
  IntMat out;
  out.reserve(A.size());
  for (const RatVec& r : A) {
    long long l = 1;
    for (const Rat& x : r) l = std::lcm(l, x.denominator());
    IntVec row(r.size());
    for (size_t j = 0; j < r.size(); ++j) {
      const Rat s = r[j] * l;
      row[j] = s.numerator();
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

void col_swap(IntMat& M, size_t a, size_t b) {
  for (auto& row : M) std::swap(row[a], row[b]);
}

void col_axpy(IntMat& M, long long f, size_t src, size_t dst) {
  for (auto& row : M) row[dst] += f * row[src];
}

void col_negate(IntMat& M, size_t c) {
  for (auto& row : M) row[c] = -row[c];
}

// Replace cols (a, b) by (a*x + b*y, a*u + b*v) with xv - yu = +-1.
void col_combine(IntMat& M, size_t a, size_t b, long long x, long long y,
                 long long u, long long v) {
  for (auto& row : M) {
    const long long ra = row[a], rb = row[b];
    row[a] = x * ra + y * rb;
    row[b] = u * ra + v * rb;
  }
}

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return std::abs(a);
  }
  long long x1, y1;
  const long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HermiteForm column_hermite(IntMat A) {
  const size_t m = A.size();
  const size_t n = m ? A[0].size() : 0;
  HermiteForm hf;
  hf.U.assign(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) hf.U[i][i] = 1;
  size_t c = 0;
  for (size_t r = 0; r < m && c < n; ++r) {
    size_t p = c;
    while (p < n && A[r][p] == 0) ++p;
    if (p == n) continue;
    if (p != c) {
      col_swap(A, c, p);
      col_swap(hf.U, c, p);
    }
    for (size_t j = c + 1; j < n; ++j) {
      if (A[r][j] == 0) continue;
      long long x, y;
      const long long g = ext_gcd(A[r][c], A[r][j], x, y);
      const long long u = -A[r][j] / g, v = A[r][c] / g;
      col_combine(A, c, j, x, y, u, v);
      col_combine(hf.U, c, j, x, y, u, v);
    }
    if (A[r][c] < 0) {
      col_negate(A, c);
      col_negate(hf.U, c);
    }
    for (size_t j = 0; j < c; ++j) {
      const long long f = -floor_div(A[r][j], A[r][c]);
      if (f != 0) {
        col_axpy(A, f, c, j);
        col_axpy(hf.U, f, c, j);
      }
    }
    ++c;
  }
  hf.rank = static_cast<int>(c);
  hf.H = std::move(A);
  return hf;
}

IntMat kernel_basis(const IntMat& A) {
  const size_t n = A.empty() ? 0 : A[0].size();
  HermiteForm hf = column_hermite(A);
  IntMat out;
  for (size_t j = hf.rank; j < n; ++j) {
    IntVec v(n);
    for (size_t i = 0; i < n; ++i) v[i] = hf.U[i][j];
    out.push_back(std::move(v));
  }
  return out;
}

IntVec FiniteQuotient::reduce_mod(IntVec x) const {
  const size_t n = hnf.size();
  for (size_t i = 0; i < n; ++i) {
    const long long q = floor_div(x[i], hnf[i][i]);
    if (q != 0)
      for (size_t r = i; r < n; ++r) x[r] -= q * hnf[r][i];
  }
  return x;
}

int FiniteQuotient::rep_index(const IntVec& x) const {
  const IntVec r = reduce_mod(x);
  for (size_t i = 0; i < reps.size(); ++i)
    if (reps[i] == r) return static_cast<int>(i);
  throw Error("reduced vector missing from representative table");
}

FiniteQuotient finite_quotient(const IntMat& A) {
  const size_t n = A.size();
  HermiteForm hf = column_hermite(A);
  if (static_cast<size_t>(hf.rank) != n)
    throw LatticeError("quotient is infinite: generator lattice not full rank");
  FiniteQuotient q;
  q.hnf.assign(n, IntVec(n, 0));
  long long index = 1;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) q.hnf[i][j] = hf.H[i][j];
    index *= q.hnf[i][i];
  }
  if (index <= 0 || index > 1000000)
    throw LatticeError("quotient index out of supported range");
  IntVec cur(n, 0);
  while (true) {
    q.reps.push_back(cur);
    size_t i = n;
    while (i > 0) {
      --i;
      if (++cur[i] < q.hnf[i][i]) break;
      cur[i] = 0;
      if (i == 0) return q;
    }
    if (n == 0) return q;
  }
}

}  // namespace trigdunkl
