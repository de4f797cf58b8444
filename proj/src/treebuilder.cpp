#include "dilate/treebuilder.hpp"

#include <charconv>
#include <sstream>

namespace dilate {

namespace {

void check_parameters(const std::vector<int>& m, std::size_t min_length) {
  if (m.size() < min_length) {
    if (min_length == 2) throw TupleError("beta_(m1) is not defined: a tuple needs at least two entries");
    throw TupleError("parameter list must be nonempty");
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] < 1) {
      std::ostringstream msg;
      msg << "parameter m_" << i + 1 << " = " << m[i] << " must be >= 1";
      throw TupleError(msg.str());
    }
}

std::vector<int> parse_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      std::ostringstream msg;
      msg << "malformed tuple '" << text << "': expected comma-separated positive integers";
      throw TupleError(msg.str());
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(std::span<const int> m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  return os.str();
}

using EntryMap = std::map<NNMatrix::Index, NNMatrix::Entry>;

void put(EntryMap& e, std::size_t row, std::size_t col, NNMatrix::Entry value) {
  e[{row, col}] = value;
}

}  // namespace

std::size_t edge_index(std::span<const int> m, std::size_t j) {
  if (j < 1 || j > m.size()) throw TupleError("edge index n_j requested outside 1..length");
  std::size_t s = j;
  for (std::size_t i = 0; i < j; ++i) s += static_cast<std::size_t>(m[i]);
  return s;
}

Prefix::Prefix(std::vector<int> m) : m_(std::move(m)) { check_parameters(m_, 1); }

std::size_t Prefix::n(std::size_t j) const { return edge_index(m_, j); }

Prefix Prefix::head(std::size_t len) const {
  if (len < 1 || len > m_.size()) throw TupleError("prefix head length out of range");
  return Prefix(std::vector<int>(m_.begin(), m_.begin() + static_cast<long>(len)));
}

MTuple Prefix::append(int m_last) const {
  std::vector<int> m = m_;
  m.push_back(m_last);
  return MTuple(std::move(m));
}

std::string Prefix::to_string() const { return join(m_); }

MTuple::MTuple(std::vector<int> m) : m_(std::move(m)) { check_parameters(m_, 2); }

std::size_t MTuple::n(std::size_t j) const { return edge_index(m_, j); }

Prefix MTuple::prefix() const { return Prefix(std::vector<int>(m_.begin(), m_.end() - 1)); }

MTuple MTuple::incremented(std::size_t i) const {
  if (i < 1 || i > m_.size()) throw TupleError("coordinate index out of range");
  std::vector<int> m = m_;
  ++m[i - 1];
  return MTuple(std::move(m));
}

std::string MTuple::to_string() const { return join(m_); }

MTuple MTuple::parse(std::string_view text) { return MTuple(parse_list(text)); }

Prefix parse_prefix(std::string_view text) { return Prefix(parse_list(text)); }

NNMatrix TreeMapSpec::transition_counts() const {
  EntryMap e;
  for (const auto& [edge, path] : images) {
    if (edge < 1 || edge > edge_count) throw MatrixError("tree map: source edge out of range");
    for (long oriented : path) {
      const auto target = static_cast<std::size_t>(oriented < 0 ? -oriented : oriented);
      if (target < 1 || target > edge_count) throw MatrixError("tree map: image edge out of range");
      ++e[{target, edge}];
    }
  }
  return NNMatrix(edge_count, e);
}

TreeMapSpec TreeMapSpec::from_matrix(const NNMatrix& m) {
  TreeMapSpec spec;
  spec.edge_count = m.size();
  for (const auto& [idx, count] : m.entries()) {
    auto& path = spec.images[idx.second];
    path.insert(path.end(), count, static_cast<long>(idx.first));
  }
  return spec;
}

NNMatrix transition_matrix(const MTuple& m) {
  EntryMap e;
  const std::size_t n1 = m.n(1);
  for (std::size_t i = 1; i < n1; ++i) put(e, i, i + 1, 1);
  put(e, n1, 1, 1);

  for (std::size_t level = 1; level <= m.k(); ++level) {
    const std::size_t ni = m.n(level);
    const std::size_t next = m.n(level + 1);
    put(e, ni - 1, ni + 1, 1);
    put(e, ni, ni + 1, 1);

    // The first and last rows of the new star both feed edge 1 and the
    // first edge n_j + 1 of every earlier star (twice).
    for (const std::size_t row : {ni + 1, next}) {
      put(e, row, 1, 1);
      for (std::size_t j = 1; j < level; ++j) put(e, row, m.n(j) + 1, 2);
    }
    put(e, ni + 1, ni + 1, 1);
    put(e, ni + 1, ni + 2, 1);
    for (std::size_t r = ni + 2; r < next; ++r) put(e, r, r + 1, 1);
    put(e, next, ni + 1, 2);
  }
  return NNMatrix(m.size(), e);
}

NNMatrix dominant_matrix(const Prefix& prefix) {
  return transition_matrix(prefix.append(1)).upper_left(prefix.last_edge() + 1);
}

namespace {

enum class Pencil { kTMinusB, kOneMinusTB };

IntPoly recessive(const Prefix& prefix, int appended_value, Pencil kind) {
  const NNMatrix b = transition_matrix(prefix.append(appended_value));
  const std::size_t n = b.size();
  BigMatrix lin(n, std::vector<BigInt>(n));
  BigMatrix con(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) (kind == Pencil::kTMinusB ? lin : con)[i][i] = 1;
  for (const auto& [idx, value] : b.entries())
    (kind == Pencil::kTMinusB ? con : lin)[idx.first - 1][idx.second - 1] = -BigInt(value);

  // Row l+1 (1-based) takes the last row; keep the leading (l+1) block.
  const std::size_t l = prefix.last_edge();
  lin[l] = lin[n - 1];
  con[l] = con[n - 1];
  lin.resize(l + 1);
  con.resize(l + 1);
  for (auto& row : lin) row.resize(l + 1);
  for (auto& row : con) row.resize(l + 1);
  return pencil_determinant(lin, con);
}

}  // namespace

IntPoly recessive_S(const Prefix& prefix, int appended_value) {
  return recessive(prefix, appended_value, Pencil::kTMinusB);
}

IntPoly recessive_U(const Prefix& prefix, int appended_value) {
  return recessive(prefix, appended_value, Pencil::kOneMinusTB);
}

bool StructureReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string StructureReport::failures() const {
  std::ostringstream os;
  for (const auto& c : checks)
    if (!c.passed) os << c.name << ": " << c.detail << '\n';
  return os.str();
}

StructureReport validate_structure(const MTuple& m) { return validate_structure(transition_matrix(m), m); }

StructureReport validate_structure(const NNMatrix& b, const MTuple& m) {
  StructureReport report;
  const std::size_t l = m.n(m.k());
  const std::size_t last = m.size();
  auto entry_desc = [&](std::size_t r, std::size_t c) {
    std::ostringstream os;
    os << "entry (" << r << ", " << c << ") = " << b.at(r, c);
    return os.str();
  };

  if (b.size() != last) {
    std::ostringstream os;
    os << "matrix size " << b.size() << " != n_{k+1} = " << last;
    report.checks.push_back({"size", false, os.str()});
    return report;
  }

  auto positive = [&](const char* name, std::size_t r, std::size_t c, NNMatrix::Entry threshold) {
    const bool ok = b.at(r, c) > threshold;
    report.checks.push_back({name, ok, ok ? "" : entry_desc(r, c)});
  };
  positive("feed into star", l, l + 1, 0);
  positive("star self-loop", l + 1, l + 1, 0);
  positive("double return", last, l + 1, 1);

  StructureCheck same{"first and last star rows agree", true, ""};
  for (std::size_t c = 1; c <= l && same.passed; ++c)
    if (b.at(l + 1, c) != b.at(last, c)) {
      same.passed = false;
      same.detail = entry_desc(l + 1, c) + " vs " + entry_desc(last, c);
    }
  report.checks.push_back(same);

  StructureCheck middle{"middle block unit superdiagonal", true, ""};
  for (std::size_t r = l + 2; r < last && middle.passed; ++r)
    for (std::size_t c = 1; c <= last; ++c) {
      const NNMatrix::Entry expected = c == r + 1 ? 1 : 0;
      if (b.at(r, c) != expected) {
        middle.passed = false;
        middle.detail = entry_desc(r, c);
        break;
      }
    }
  report.checks.push_back(middle);
  return report;
}

}  // namespace dilate
