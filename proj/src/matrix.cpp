#include "menage/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace menage {

namespace {

std::string position_message(int line, int column, const std::string& message) {
  std::ostringstream out;
  out << "line " << line << ", column " << column << ": " << message;
  return out.str();
}

}  // namespace

MatrixParseError::MatrixParseError(int line, int column, const std::string& message)
    : std::runtime_error(position_message(line, column, message)), line_(line), column_(column) {}

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0 || (rows == 0) != (cols == 0)) {
    throw std::invalid_argument("BinaryMatrix: shape must be 0x0 or have rows >= 1 and cols >= 1");
  }
  cells_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  BinaryMatrix m(r, c);
  int i = 1;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      throw std::invalid_argument("BinaryMatrix::from_rows: ragged rows");
    }
    int j = 1;
    for (int v : row) {
      m.set(i, j, v);
      ++j;
    }
    ++i;
  }
  return m;
}

void BinaryMatrix::check_bounds(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    std::ostringstream out;
    out << "BinaryMatrix: position (" << i << "," << j << ") outside " << rows_ << "x" << cols_;
    throw std::out_of_range(out.str());
  }
}

int BinaryMatrix::at(int i, int j) const {
  check_bounds(i, j);
  return cells_[index(i, j)];
}

void BinaryMatrix::set(int i, int j, int value) {
  check_bounds(i, j);
  if (value != 0 && value != 1) {
    throw std::invalid_argument("BinaryMatrix: cell values must be 0 or 1");
  }
  cells_[index(i, j)] = static_cast<std::uint8_t>(value);
}

long long BinaryMatrix::ones_count() const {
  return std::accumulate(cells_.begin(), cells_.end(), 0LL);
}

BinaryMatrix BinaryMatrix::transpose() const {
  if (empty()) return {};
  BinaryMatrix out(cols_, rows_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

BinaryMatrix BinaryMatrix::flip_rows() const {
  if (empty()) return {};
  BinaryMatrix out(rows_, cols_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j) out.set(rows_ - i + 1, j, at(i, j));
  return out;
}

BinaryMatrix BinaryMatrix::flip_cols() const {
  if (empty()) return {};
  BinaryMatrix out(rows_, cols_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j) out.set(i, cols_ - j + 1, at(i, j));
  return out;
}

std::string BinaryMatrix::to_text() const {
  std::ostringstream out;
  out << rows_ << ' ' << cols_ << '\n';
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= cols_; ++j) out << (at(i, j) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

namespace {

// Splits into lines, accepting "\n", "\r\n", and a missing final newline.
std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = nl + 1;
  }
  return lines;
}

}  // namespace

BinaryMatrix BinaryMatrix::from_text(std::string_view text) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) {
    throw MatrixParseError(1, 1, "missing header line \"R C\"");
  }

  long long rows = 0;
  long long cols = 0;
  {
    std::istringstream header(lines[0]);
    std::string extra;
    if (!(header >> rows >> cols) || (header >> extra)) {
      throw MatrixParseError(1, 1, "header must be two decimal numbers \"R C\"");
    }
  }
  if (rows < 0 || cols < 0 || rows > 100000 || cols > 100000 || (rows == 0) != (cols == 0)) {
    throw MatrixParseError(1, 1, "invalid dimensions " + std::to_string(rows) + " x " + std::to_string(cols));
  }
  if (static_cast<long long>(lines.size()) - 1 < rows) {
    throw MatrixParseError(static_cast<int>(lines.size()) + 1, 1,
                           "expected " + std::to_string(rows) + " matrix rows, got " +
                               std::to_string(lines.size() - 1));
  }
  if (static_cast<long long>(lines.size()) - 1 > rows) {
    throw MatrixParseError(static_cast<int>(rows) + 2, 1, "unexpected extra line after matrix rows");
  }

  BinaryMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  for (long long i = 0; i < rows; ++i) {
    const std::string& line = lines[static_cast<std::size_t>(i) + 1];
    const int line_no = static_cast<int>(i) + 2;
    if (static_cast<long long>(line.size()) != cols) {
      throw MatrixParseError(line_no, static_cast<int>(std::min<std::size_t>(line.size() + 1, cols + 1)),
                             "row must be exactly " + std::to_string(cols) + " characters, got " +
                                 std::to_string(line.size()));
    }
    for (long long j = 0; j < cols; ++j) {
      const char ch = line[static_cast<std::size_t>(j)];
      if (ch != '0' && ch != '1') {
        throw MatrixParseError(line_no, static_cast<int>(j) + 1,
                               std::string("invalid character '") + ch + "', expected 0 or 1");
      }
      m.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, ch - '0');
    }
  }
  return m;
}

BinaryMatrix menage_matrix(int n) {
  if (n < 2) {
    throw std::invalid_argument("menage_matrix: n must be >= 2");
  }
  BinaryMatrix m(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.set(i, j, 1);
  for (int i = 1; i <= n; ++i) {
    m.set(i, i, 0);
    m.set(i, i == n ? 1 : i + 1, 0);
  }
  return m;
}

BinaryMatrix cycle_plus_identity(int n) {
  if (n < 2) {
    throw std::invalid_argument("cycle_plus_identity: n must be >= 2");
  }
  BinaryMatrix m(n, n);
  for (int i = 1; i <= n; ++i) {
    m.set(i, i, 1);
    m.set(i, i == n ? 1 : i + 1, 1);
  }
  return m;
}

BinaryMatrix minor(const BinaryMatrix& m, int i, int j) {
  if (i < 1 || i > m.rows() || j < 1 || j > m.cols()) {
    throw std::out_of_range("minor: index out of range");
  }
  if (m.rows() == 1 && m.cols() == 1) {
    return {};
  }
  if (m.rows() == 1 || m.cols() == 1) {
    throw std::invalid_argument("minor: would leave a 0xk or kx0 shape");
  }
  BinaryMatrix out(m.rows() - 1, m.cols() - 1);
  for (int r = 1; r <= m.rows(); ++r) {
    if (r == i) continue;
    for (int c = 1; c <= m.cols(); ++c) {
      if (c == j) continue;
      out.set(r < i ? r : r - 1, c < j ? c : c - 1, m.at(r, c));
    }
  }
  return out;
}

BinaryMatrix zero_entry(const BinaryMatrix& m, int i, int j) {
  if (m.at(i, j) != 1) {
    std::ostringstream out;
    out << "zero_entry: cell (" << i << "," << j << ") is already 0";
    throw std::domain_error(out.str());
  }
  BinaryMatrix copy = m;
  copy.set(i, j, 0);
  return copy;
}

BinaryMatrix complement_in_J(const BinaryMatrix& m) {
  BinaryMatrix out = m;
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) out.set(i, j, 1 - m.at(i, j));
  return out;
}

BinaryMatrix canonical_staircase(int k) {
  if (k < 1) {
    throw std::invalid_argument("canonical_staircase: k must be >= 1");
  }
  const int rows = (k + 1) / 2;
  const int cols = k / 2 + 1;
  BinaryMatrix m(rows, cols);
  for (int t = 1; t <= k; ++t) {
    if (t % 2 == 1) {
      m.set((t + 1) / 2, (t + 1) / 2, 1);
    } else {
      m.set(t / 2, t / 2 + 1, 1);
    }
  }
  return m;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<BinaryMatrix> disjunct_components(const BinaryMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  Dsu dsu(rows + cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      if (m.at(i, j)) dsu.unite(i - 1, rows + j - 1);

  // Components keyed by DSU root, in order of their first 1-cell (row-major).
  std::vector<int> roots;
  std::vector<std::vector<std::pair<int, int>>> cells_by_component;
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      if (!m.at(i, j)) continue;
      const int root = dsu.find(i - 1);
      auto it = std::find(roots.begin(), roots.end(), root);
      std::size_t idx;
      if (it == roots.end()) {
        roots.push_back(root);
        cells_by_component.emplace_back();
        idx = roots.size() - 1;
      } else {
        idx = static_cast<std::size_t>(it - roots.begin());
      }
      cells_by_component[idx].emplace_back(i, j);
    }
  }

  std::vector<BinaryMatrix> components;
  components.reserve(cells_by_component.size());
  for (const auto& cells : cells_by_component) {
    std::vector<int> comp_rows;
    std::vector<int> comp_cols;
    for (const auto& [i, j] : cells) {
      if (std::find(comp_rows.begin(), comp_rows.end(), i) == comp_rows.end()) comp_rows.push_back(i);
      if (std::find(comp_cols.begin(), comp_cols.end(), j) == comp_cols.end()) comp_cols.push_back(j);
    }
    std::sort(comp_rows.begin(), comp_rows.end());
    std::sort(comp_cols.begin(), comp_cols.end());
    BinaryMatrix sub(static_cast<int>(comp_rows.size()), static_cast<int>(comp_cols.size()));
    for (const auto& [i, j] : cells) {
      const int r = static_cast<int>(std::find(comp_rows.begin(), comp_rows.end(), i) - comp_rows.begin()) + 1;
      const int c = static_cast<int>(std::find(comp_cols.begin(), comp_cols.end(), j) - comp_cols.begin()) + 1;
      sub.set(r, c, 1);
    }
    components.push_back(std::move(sub));
  }
  return components;
}

BinaryMatrix block_diagonal(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  BinaryMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= a.cols(); ++j) out.set(i, j, a.at(i, j));
  for (int i = 1; i <= b.rows(); ++i)
    for (int j = 1; j <= b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b.at(i, j));
  return out;
}

BinaryMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return BinaryMatrix::from_text(buffer.str());
}

}  // namespace menage
