#pragma once

#include "dilate/intpoly.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dilate {

class MatrixError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Square matrix with non-negative integer entries, stored sparsely with
/// 1-based (row, col) keys. Only strictly positive entries are stored.
class NNMatrix {
public:
  using Entry = std::uint64_t;
  using Index = std::pair<std::size_t, std::size_t>;

  NNMatrix() = default;
  /// Zero entries in `entries` are dropped; out-of-range indices throw.
  NNMatrix(std::size_t size, const std::map<Index, Entry>& entries);
  static NNMatrix from_dense(const std::vector<std::vector<Entry>>& rows);

  std::size_t size() const noexcept { return size_; }
  Entry at(std::size_t row, std::size_t col) const;
  const std::map<Index, Entry>& entries() const noexcept { return entries_; }
  std::vector<std::vector<Entry>> dense() const;

  /// Upper-left n x n block.
  NNMatrix upper_left(std::size_t n) const;
  NNMatrix transpose() const;

  /// (M x)_i for a real vector x of length size().
  std::vector<double> apply(std::span<const double> x) const;

  /// "N" then one "row col value" line per nonzero, in row-major order.
  std::string to_text() const;
  static NNMatrix parse_text(const std::string& text);
  /// Rows of space-separated entries.
  std::string to_dense_text() const;

  friend bool operator==(const NNMatrix&, const NNMatrix&) = default;

private:
  std::size_t size_ = 0;
  std::map<Index, Entry> entries_;
  // CSR copy of entries_, 0-based, for fast products.
  std::vector<std::size_t> row_start_;
  std::vector<std::size_t> col_;
  std::vector<double> val_;
};

std::ostream& operator<<(std::ostream& os, const NNMatrix& m);

/// Matrix of arbitrary-precision integers, row-major, 0-based.
using BigMatrix = std::vector<std::vector<BigInt>>;

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt bareiss_determinant(BigMatrix a);

/// det(t * lin + con) as an exact polynomial, for integer matrices `lin`
/// and `con` of equal square size. Evaluated at size+1 integer points and
/// interpolated exactly.
IntPoly pencil_determinant(const BigMatrix& lin, const BigMatrix& con);

/// |tI - M|, monic of degree N.
IntPoly char_poly(const NNMatrix& m);

/// Strongly connected components of the digraph with an edge j -> i iff
/// entry (i, j) != 0. component[v] (0-based vertex) is the component id;
/// ids are assigned in order of first appearance by vertex index.
struct Components {
  std::vector<std::size_t> component;
  std::size_t count = 0;
};
Components strongly_connected_components(const NNMatrix& m);

/// gcd of directed cycle lengths inside a component; 0 if it has no cycle.
std::size_t component_period(const NNMatrix& m, const Components& comps, std::size_t id);

bool is_irreducible(const NNMatrix& m);
/// Strongly connected with period 1. For N <= 8 the answer is cross-checked
/// against wielandt_primitive().
bool is_primitive(const NNMatrix& m);
/// Brute force: is M^((N-1)^2 + 1) entrywise positive?
bool wielandt_primitive(const NNMatrix& m);

struct PFCertificate {
  bool irreducible = false;
  bool primitive = false;
  double eigenvalue = 0;
  std::vector<double> right_eigenvector;  // max entry normalized to 1
  double residual = 0;                    // max |M v - lambda v|
};

/// Perron-Frobenius eigenpair by power iteration. Throws MatrixError if M
/// is not primitive.
PFCertificate spectral_radius(const NNMatrix& m, double tol = kDefaultTol);

/// min_i (M y)_i / y_i for y > 0 (0 if some y_i == 0). Lower bound for the
/// PF eigenvalue; equality iff y is an eigenvector.
double subinvariance_bound(const NNMatrix& m, std::span<const double> y);

}  // namespace dilate
