#pragma once

#include "dilate/intpoly.hpp"
#include "dilate/nnmatrix.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dilate {

class TupleError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// n_j = m_1 + ... + m_j + j.
std::size_t edge_index(std::span<const int> m, std::size_t j);

class MTuple;

/// Leading parameters (m_1, ..., m_k) of a braid; at least one entry, all >= 1.
class Prefix {
public:
  explicit Prefix(std::vector<int> m);

  std::span<const int> values() const noexcept { return m_; }
  std::size_t length() const noexcept { return m_.size(); }
  int operator[](std::size_t i) const { return m_.at(i); }
  /// n_j for 1 <= j <= length().
  std::size_t n(std::size_t j) const;
  /// n_k, the index of the last edge of the prefix tree.
  std::size_t last_edge() const { return n(length()); }
  /// (-1)^(k+1) with k = length(); the sign in front of R_* and R.
  int sign() const noexcept { return length() % 2 == 1 ? 1 : -1; }

  Prefix head(std::size_t len) const;
  MTuple append(int m_last) const;

  std::string to_string() const;
  friend bool operator==(const Prefix&, const Prefix&) = default;

private:
  std::vector<int> m_;
};

/// Full parameter vector (m_1, ..., m_{k+1}) of the braid family, k >= 1.
class MTuple {
public:
  explicit MTuple(std::vector<int> m);

  std::span<const int> values() const noexcept { return m_; }
  std::size_t length() const noexcept { return m_.size(); }
  int operator[](std::size_t i) const { return m_.at(i); }
  std::size_t k() const noexcept { return m_.size() - 1; }
  /// n_j for 1 <= j <= k+1.
  std::size_t n(std::size_t j) const;
  /// Matrix size N = n_{k+1}.
  std::size_t size() const { return n(m_.size()); }
  /// sigma = (-1)^(k+1).
  int sign() const noexcept { return k() % 2 == 1 ? 1 : -1; }
  int last() const noexcept { return m_.back(); }
  /// (m_1, ..., m_k).
  Prefix prefix() const;
  /// Copy with m_i incremented (1-based coordinate).
  MTuple incremented(std::size_t i) const;

  std::string to_string() const;
  /// "m1,m2,...": comma separated, entries >= 1, at least two entries.
  static MTuple parse(std::string_view text);
  friend bool operator==(const MTuple&, const MTuple&) = default;

private:
  std::vector<int> m_;
};

/// "m1,m2,..." for a prefix of any length >= 1.
Prefix parse_prefix(std::string_view text);

/// Image edge paths of a tree map, kept as oriented edge indices
/// (negative = reversed). Only the transition counts are meaningful.
struct TreeMapSpec {
  std::size_t edge_count = 0;
  std::map<std::size_t, std::vector<long>> images;

  /// Entry (i, j) = number of times edge i occurs in the image of edge j.
  NNMatrix transition_counts() const;
  /// Canonical spec (positive orientation, ascending edges) with the given counts.
  static TreeMapSpec from_matrix(const NNMatrix& m);
};

/// Transition matrix of the combined tree map for m, built level by level.
NNMatrix transition_matrix(const MTuple& m);

/// Upper-left (n_i + 1) block of transition_matrix(prefix ++ (1)).
NNMatrix dominant_matrix(const Prefix& prefix);

/// Recessive polynomial S: in tI - B (B = transition_matrix(prefix ++ (1)))
/// replace row n_i + 1 by the last row and take the determinant of the
/// upper-left (n_i + 1) block. appended_value selects the dummy last
/// parameter; the result does not depend on it.
IntPoly recessive_S(const Prefix& prefix, int appended_value = 1);
/// Same recipe on I - tB.
IntPoly recessive_U(const Prefix& prefix, int appended_value = 1);

struct StructureCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // offending entry when !passed
};

struct StructureReport {
  std::vector<StructureCheck> checks;
  bool ok() const;
  std::string failures() const;
};

/// Structural checks on the bottom level of a transition matrix.
StructureReport validate_structure(const MTuple& m);
StructureReport validate_structure(const NNMatrix& b, const MTuple& m);

}  // namespace dilate
