#include "dilate/nnmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

namespace dilate {

NNMatrix::NNMatrix(std::size_t size, const std::map<Index, Entry>& entries) : size_(size) {
  if (size == 0) throw MatrixError("matrix size must be positive");
  for (const auto& [idx, value] : entries) {
    const auto [r, c] = idx;
    if (r < 1 || r > size || c < 1 || c > size) {
      std::ostringstream msg;
      msg << "entry (" << r << ", " << c << ") outside 1.." << size;
      throw MatrixError(msg.str());
    }
    if (value != 0) entries_.emplace(idx, value);
  }
  row_start_.assign(size + 1, 0);
  for (const auto& [idx, value] : entries_) ++row_start_[idx.first];
  std::partial_sum(row_start_.begin(), row_start_.end(), row_start_.begin());
  col_.reserve(entries_.size());
  val_.reserve(entries_.size());
  // Map order is row-major, so CSR columns land in place.
  for (const auto& [idx, value] : entries_) {
    col_.push_back(idx.second - 1);
    val_.push_back(static_cast<double>(value));
  }
}

NNMatrix NNMatrix::from_dense(const std::vector<std::vector<Entry>>& rows) {
  std::map<Index, Entry> e;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw MatrixError("dense matrix must be square");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] != 0) e[{i + 1, j + 1}] = rows[i][j];
  }
  return NNMatrix(rows.size(), e);
}

NNMatrix::Entry NNMatrix::at(std::size_t row, std::size_t col) const {
  if (row < 1 || row > size_ || col < 1 || col > size_) throw MatrixError("index out of range");
  const auto it = entries_.find({row, col});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<std::vector<NNMatrix::Entry>> NNMatrix::dense() const {
  std::vector<std::vector<Entry>> out(size_, std::vector<Entry>(size_, 0));
  for (const auto& [idx, value] : entries_) out[idx.first - 1][idx.second - 1] = value;
  return out;
}

NNMatrix NNMatrix::upper_left(std::size_t n) const {
  if (n == 0 || n > size_) throw MatrixError("upper_left: block size out of range");
  std::map<Index, Entry> e;
  for (const auto& [idx, value] : entries_)
    if (idx.first <= n && idx.second <= n) e.emplace(idx, value);
  return NNMatrix(n, e);
}

NNMatrix NNMatrix::transpose() const {
  std::map<Index, Entry> e;
  for (const auto& [idx, value] : entries_) e.emplace(Index{idx.second, idx.first}, value);
  return NNMatrix(size_, e);
}

std::vector<double> NNMatrix::apply(std::span<const double> x) const {
  if (x.size() != size_) throw MatrixError("apply: vector length mismatch");
  std::vector<double> out(size_, 0.0);
  for (std::size_t r = 0; r < size_; ++r) {
    double s = 0;
    for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k) s += val_[k] * x[col_[k]];
    out[r] = s;
  }
  return out;
}

std::string NNMatrix::to_text() const {
  std::ostringstream os;
  os << size_ << '\n';
  for (const auto& [idx, value] : entries_) os << idx.first << ' ' << idx.second << ' ' << value << '\n';
  return os.str();
}

NNMatrix NNMatrix::parse_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n <= 0) throw MatrixError("matrix text: expected positive size on first line");
  std::map<Index, Entry> e;
  long long r = 0, c = 0, v = 0;
  while (in >> r) {
    if (!(in >> c >> v)) throw MatrixError("matrix text: truncated 'row col value' line");
    if (v <= 0) throw MatrixError("matrix text: entries must be positive integers");
    if (r < 1 || c < 1 || r > n || c > n) throw MatrixError("matrix text: index out of range");
    const Index idx{static_cast<std::size_t>(r), static_cast<std::size_t>(c)};
    if (!e.emplace(idx, static_cast<Entry>(v)).second)
      throw MatrixError("matrix text: duplicate entry");
  }
  if (!in.eof()) throw MatrixError("matrix text: unexpected token");
  return NNMatrix(static_cast<std::size_t>(n), e);
}

std::string NNMatrix::to_dense_text() const {
  std::ostringstream os;
  for (const auto& row : dense()) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << '\n';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const NNMatrix& m) { return os << m.to_dense_text(); }

BigInt bareiss_determinant(BigMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntPoly pencil_determinant(const BigMatrix& lin, const BigMatrix& con) {
  const std::size_t n = lin.size();
  if (con.size() != n) throw MatrixError("pencil_determinant: size mismatch");

  // Values at x = 0..n, then forward differences in place.
  std::vector<BigInt> diff(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    BigMatrix a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (lin[i].size() != n || con[i].size() != n) throw MatrixError("pencil_determinant: not square");
      for (std::size_t j = 0; j < n; ++j) a[i][j] = lin[i][j] * x + con[i][j];
    }
    diff[x] = bareiss_determinant(std::move(a));
  }
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t x = n; x >= level; --x) diff[x] -= diff[x - 1];

  // f(x) = sum_j diff[j] * C(x, j); for integer polynomials diff[j] / j! is exact.
  IntPoly result;
  IntPoly falling = IntPoly::constant(1);
  BigInt factorial = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    if (j > 0) {
      factorial *= j;
      falling *= IntPoly{-static_cast<long long>(j - 1), 1};
    }
    if (diff[j] == 0) continue;
    if (diff[j] % factorial != 0) throw std::logic_error("pencil_determinant: non-integral interpolant");
    result += falling.scaled(diff[j] / factorial);
  }
  return result;
}

IntPoly char_poly(const NNMatrix& m) {
  const std::size_t n = m.size();
  BigMatrix lin(n, std::vector<BigInt>(n));
  BigMatrix con(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) lin[i][i] = 1;
  for (const auto& [idx, value] : m.entries()) con[idx.first - 1][idx.second - 1] = -BigInt(value);
  return pencil_determinant(lin, con);
}

namespace {

// out[j] = vertices i with an edge j -> i, i.e. entry (i, j) != 0 (0-based).
std::vector<std::vector<std::size_t>> successors(const NNMatrix& m) {
  std::vector<std::vector<std::size_t>> out(m.size());
  for (const auto& [idx, value] : m.entries()) out[idx.second - 1].push_back(idx.first - 1);
  return out;
}

std::vector<std::vector<std::size_t>> predecessors(const NNMatrix& m) {
  std::vector<std::vector<std::size_t>> in(m.size());
  for (const auto& [idx, value] : m.entries()) in[idx.first - 1].push_back(idx.second - 1);
  return in;
}

}  // namespace

Components strongly_connected_components(const NNMatrix& m) {
  const std::size_t n = m.size();
  const auto out = successors(m);
  const auto in = predecessors(m);

  // Kosaraju: finishing order on G, then sweep G^T in reverse finishing order.
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = true;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out[v].size()) {
        const std::size_t w = out[v][next++];
        if (!seen[w]) {
          seen[w] = true;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw(n, unset);
  std::size_t count = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (raw[*it] != unset) continue;
    std::vector<std::size_t> stack{*it};
    raw[*it] = count;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : in[v])
        if (raw[w] == unset) {
          raw[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }

  Components comps;
  comps.count = count;
  comps.component.assign(n, 0);
  std::vector<std::size_t> relabel(count, unset);
  std::size_t next_id = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (relabel[raw[v]] == unset) relabel[raw[v]] = next_id++;
    comps.component[v] = relabel[raw[v]];
  }
  return comps;
}

std::size_t component_period(const NNMatrix& m, const Components& comps, std::size_t id) {
  const std::size_t n = m.size();
  const auto out = successors(m);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> depth(n, unset);

  std::size_t root = unset;
  for (std::size_t v = 0; v < n && root == unset; ++v)
    if (comps.component[v] == id) root = v;
  if (root == unset) throw MatrixError("component_period: unknown component");

  std::vector<std::size_t> queue{root};
  depth[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t v = queue[head];
    for (std::size_t w : out[v])
      if (comps.component[w] == id && depth[w] == unset) {
        depth[w] = depth[v] + 1;
        queue.push_back(w);
      }
  }

  std::size_t g = 0;
  for (std::size_t v : queue)
    for (std::size_t w : out[v]) {
      if (comps.component[w] != id) continue;
      const auto a = static_cast<long long>(depth[v] + 1);
      const auto b = static_cast<long long>(depth[w]);
      g = std::gcd(g, static_cast<std::size_t>(std::llabs(a - b)));
    }
  return g;
}

bool is_irreducible(const NNMatrix& m) {
  const Components comps = strongly_connected_components(m);
  return comps.count == 1 && component_period(m, comps, 0) != 0;
}

bool is_primitive(const NNMatrix& m) {
  const Components comps = strongly_connected_components(m);
  const bool result = comps.count == 1 && component_period(m, comps, 0) == 1;
  if (m.size() <= 8 && result != wielandt_primitive(m))
    throw std::logic_error("is_primitive disagrees with the Wielandt brute force");
  return result;
}

bool wielandt_primitive(const NNMatrix& m) {
  const std::size_t n = m.size();
  using Bool = std::vector<std::vector<char>>;
  auto multiply = [n](const Bool& a, const Bool& b) {
    Bool c(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (a[i][k])
          for (std::size_t j = 0; j < n; ++j) c[i][j] |= b[k][j];
    return c;
  };
  Bool base(n, std::vector<char>(n, 0));
  for (const auto& [idx, value] : m.entries()) base[idx.first - 1][idx.second - 1] = 1;
  Bool result(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = 1;
  std::size_t e = (n - 1) * (n - 1) + 1;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  for (const auto& row : result)
    for (char x : row)
      if (!x) return false;
  return true;
}

PFCertificate spectral_radius(const NNMatrix& m, double tol) {
  if (!(tol > 0)) throw MatrixError("spectral_radius: tolerance must be positive");
  if (!is_primitive(m)) throw MatrixError("spectral_radius: matrix is not primitive");

  const std::size_t n = m.size();
  constexpr long kMaxIterations = 1'000'000;
  std::vector<double> v(n, 1.0);
  bool converged = false;
  for (long it = 0; it < kMaxIterations; ++it) {
    std::vector<double> w = m.apply(v);
    // Collatz-Wielandt: min ratio <= lambda <= max ratio.
    double lo = w[0] / v[0], hi = lo, top = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = w[i] / v[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      top = std::max(top, w[i]);
    }
    for (double& x : w) x /= top;
    v = std::move(w);
    if (hi - lo < tol) {
      converged = true;
      break;
    }
  }
  if (!converged) throw std::runtime_error("spectral_radius: power iteration did not converge");

  PFCertificate cert;
  cert.irreducible = true;
  cert.primitive = true;
  const std::vector<double> w = m.apply(v);
  cert.eigenvalue = *std::max_element(w.begin(), w.end());
  for (std::size_t i = 0; i < n; ++i)
    cert.residual = std::max(cert.residual, std::fabs(w[i] - cert.eigenvalue * v[i]));
  cert.right_eigenvector = std::move(v);
  return cert;
}

double subinvariance_bound(const NNMatrix& m, std::span<const double> y) {
  if (y.size() != m.size()) throw MatrixError("subinvariance_bound: vector length mismatch");
  if (!is_primitive(m)) throw MatrixError("subinvariance_bound: matrix is not primitive");
  bool nonzero = false;
  for (double x : y) {
    if (!(x >= 0) || !std::isfinite(x)) throw MatrixError("subinvariance_bound: y must be non-negative");
    nonzero |= x > 0;
  }
  if (!nonzero) throw MatrixError("subinvariance_bound: y must be nonzero");
  if (std::any_of(y.begin(), y.end(), [](double x) { return x == 0; })) return 0.0;
  const std::vector<double> my = m.apply(y);
  double s = my[0] / y[0];
  for (std::size_t i = 1; i < y.size(); ++i) s = std::min(s, my[i] / y[i]);
  return s;
}

}  // namespace dilate
