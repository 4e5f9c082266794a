#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

namespace trigdunkl {

// Exact rational arithmetic for the small dense systems that arise from
// root and lattice data.  Dimensions stay in the single digits, entries
// stay tiny, so long long components never come close to overflow.
using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major
using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;  // row-major

// The symmetric rational/integer comparison templates in boost 1.74 recurse
// into themselves once C++20 rewritten candidates enter overload resolution.
// These exact-match overloads win resolution at every mixed comparison and
// stop the recursion; != and the reversed forms come from rewriting.
inline bool operator==(const Rat& a, long long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const Rat& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}

double to_double(const Rat& r);
std::vector<double> to_double(const RatVec& v);

Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& v);
bool is_zero(const RatVec& v);
bool is_integral(const Rat& r);
bool is_integral(const RatVec& v);

// Matrix-vector product with A given by rows.
RatVec mat_vec(const RatMat& A, const RatVec& x);
RatMat transpose(const RatMat& A);

// Full solution set of A x = b.  `particular` is valid only when
// `consistent`; `nullspace` is a basis of the homogeneous solutions.
struct LinearSolution {
  bool consistent = false;
  RatVec particular;
  std::vector<RatVec> nullspace;
};
LinearSolution solve_linear(RatMat A, RatVec b);
int rank(RatMat A);

// Scale each row by the lcm of its denominators; preserves the kernel.
IntMat integer_rows(const RatMat& A);

// Column-style Hermite normal form: A * U = H with U unimodular, H in
// column echelon form with positive pivots, zero columns last.
struct HermiteForm {
  IntMat H;
  IntMat U;
  int rank = 0;
};
HermiteForm column_hermite(IntMat A);

// Basis of { x in Z^n : A x = 0 } for integer A with n columns.
IntMat kernel_basis(const IntMat& A);

// Representatives of Z^n modulo the column lattice of A.  Requires the
// lattice to have full rank n (finite quotient); throws LatticeError
// otherwise.  reduce_mod maps any x to its canonical representative.
struct FiniteQuotient {
  IntMat hnf;                     // full-rank lower-triangular column HNF
  std::vector<IntVec> reps;       // canonical representatives, reps[0] = 0
  long long index() const { return static_cast<long long>(reps.size()); }
  IntVec reduce_mod(IntVec x) const;
  int rep_index(const IntVec& x) const;  // position of reduce_mod(x) in reps
};
FiniteQuotient finite_quotient(const IntMat& A);

}  // namespace trigdunkl
