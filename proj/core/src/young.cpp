#include "grmirror/young.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace grmirror {

namespace {

void check_grid(const GridShape& grid) {
  if (!grid.valid()) {
    throw std::invalid_argument("GridShape requires 1 <= k < n");
  }
}

std::vector<int> vertical_steps(const YoungDiagram& d) {
  const int cols = d.grid().cols();
  std::vector<int> v(static_cast<std::size_t>(d.grid().k));
  for (int j = 0; j < d.grid().k; ++j) {
    v[static_cast<std::size_t>(j)] = cols - d.row(j) + (j + 1);
  }
  return v;
}

}  // namespace

YoungDiagram::YoungDiagram(GridShape grid, std::vector<int> rows)
    : grid_(grid), rows_(std::move(rows)) {
  check_grid(grid_);
  if (static_cast<int>(rows_.size()) > grid_.k) {
    throw std::invalid_argument("YoungDiagram has more rows than the grid");
  }
  rows_.resize(static_cast<std::size_t>(grid_.k), 0);
  int prev = grid_.cols();
  for (int r : rows_) {
    if (r < 0 || r > prev) {
      throw std::invalid_argument("YoungDiagram rows must be weakly decreasing in [0, n-k]");
    }
    prev = r;
  }
}

YoungDiagram YoungDiagram::empty(GridShape grid) { return YoungDiagram(grid, {}); }

YoungDiagram YoungDiagram::full(GridShape grid) {
  return YoungDiagram(grid, std::vector<int>(static_cast<std::size_t>(grid.k), grid.cols()));
}

int YoungDiagram::boxes() const {
  return std::accumulate(rows_.begin(), rows_.end(), 0);
}

std::vector<YoungDiagram> enumerate_diagrams(GridShape grid) {
  check_grid(grid);
  std::vector<YoungDiagram> out;
  std::vector<int> cur(static_cast<std::size_t>(grid.k), 0);
  // Generate all weakly decreasing fillings, then sort into the graded order.
  auto rec = [&](auto&& self, int row, int maxval) -> void {
    if (row == grid.k) {
      out.emplace_back(grid, cur);
      return;
    }
    for (int v = maxval; v >= 0; --v) {
      cur[static_cast<std::size_t>(row)] = v;
      self(self, row + 1, v);
    }
  };
  rec(rec, 0, grid.cols());
  std::sort(out.begin(), out.end(), [](const YoungDiagram& a, const YoungDiagram& b) {
    const int ba = a.boxes();
    const int bb = b.boxes();
    if (ba != bb) return ba < bb;
    return vertical_steps(a) < vertical_steps(b);
  });
  return out;
}

StepSets border_steps(const YoungDiagram& d) {
  const int n = d.grid().n;
  StepSets s;
  s.vertical = vertical_steps(d);
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  for (int v : s.vertical) used[static_cast<std::size_t>(v)] = true;
  for (int t = 1; t <= n; ++t) {
    if (!used[static_cast<std::size_t>(t)]) s.horizontal.push_back(t);
  }
  return s;
}

YoungDiagram transpose(const YoungDiagram& d) {
  const GridShape tgrid = d.grid().transposed();
  std::vector<int> rows(static_cast<std::size_t>(tgrid.k), 0);
  for (int j = 0; j < tgrid.k; ++j) {
    int count = 0;
    for (int i = 0; i < d.grid().k; ++i) {
      if (d.row(i) >= j + 1) ++count;
    }
    rows[static_cast<std::size_t>(j)] = count;
  }
  return YoungDiagram(tgrid, std::move(rows));
}

YoungDiagram poincare_dual(const YoungDiagram& d) {
  const int k = d.grid().k;
  const int cols = d.grid().cols();
  std::vector<int> rows(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    rows[static_cast<std::size_t>(i)] = cols - d.row(k - 1 - i);
  }
  return YoungDiagram(d.grid(), std::move(rows));
}

RectKind classify_rectangle(const YoungDiagram& d) {
  const int k = d.grid().k;
  const int cols = d.grid().cols();
  int height = 0;
  while (height < k && d.row(height) > 0) ++height;
  if (height == 0) return RectKind::Boundary;  // empty diagram, by convention
  const int width = d.row(0);
  for (int i = 1; i < height; ++i) {
    if (d.row(i) != width) return RectKind::NotRectangular;
  }
  if (height == k || width == cols) return RectKind::Boundary;
  return RectKind::Interior;
}

PieriExpansion pieri_expand(const YoungDiagram& d) {
  PieriExpansion out;
  const int k = d.grid().k;
  const int cols = d.grid().cols();
  for (int i = 0; i < k; ++i) {
    if (d.row(i) < cols && (i == 0 || d.row(i - 1) > d.row(i))) {
      std::vector<int> rows = d.rows();
      ++rows[static_cast<std::size_t>(i)];
      out.classical.emplace_back(d.grid(), std::move(rows));
    }
  }
  if (d.row(0) == cols && d.row(k - 1) >= 1) {
    std::vector<int> hat;
    hat.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i < k; ++i) hat.push_back(d.row(i) - 1);
    out.quantum = YoungDiagram(d.grid(), std::move(hat));
  }
  return out;
}

YoungDiagram rectangle(GridShape grid, int r, int c) {
  check_grid(grid);
  if (r < 0 || r > grid.k || c < 0 || c > grid.cols()) {
    throw std::invalid_argument("rectangle does not fit the grid");
  }
  if (r == 0 || c == 0) return YoungDiagram::empty(grid);
  return YoungDiagram(grid, std::vector<int>(static_cast<std::size_t>(r), c));
}

std::vector<YoungDiagram> rectangles(GridShape grid) {
  check_grid(grid);
  std::vector<YoungDiagram> out;
  out.push_back(YoungDiagram::empty(grid));
  for (int r = 1; r <= grid.k; ++r) {
    for (int c = 1; c <= grid.cols(); ++c) {
      out.push_back(rectangle(grid, r, c));
    }
  }
  return out;
}

std::vector<YoungDiagram> boundary_rectangles(GridShape grid) {
  check_grid(grid);
  const int n = grid.n;
  const int cols = grid.cols();
  std::vector<YoungDiagram> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::vector<bool> horizontal(static_cast<std::size_t>(n + 1), false);
    for (int t = 1; t <= cols; ++t) {
      horizontal[static_cast<std::size_t>((t - 1 + s) % n + 1)] = true;
    }
    std::vector<int> v;
    for (int t = 1; t <= n; ++t) {
      if (!horizontal[static_cast<std::size_t>(t)]) v.push_back(t);
    }
    std::vector<int> rows(static_cast<std::size_t>(grid.k));
    for (int j = 0; j < grid.k; ++j) {
      rows[static_cast<std::size_t>(j)] = cols - v[static_cast<std::size_t>(j)] + (j + 1);
    }
    out.emplace_back(grid, std::move(rows));
  }
  return out;
}

std::string to_text(const YoungDiagram& d) {
  std::string s = "(";
  for (int i = 0; i < d.grid().k; ++i) {
    if (i > 0) s += ",";
    s += std::to_string(d.row(i));
  }
  s += ")";
  return s;
}

std::string to_json_string(const YoungDiagram& d) {
  nlohmann::json j;
  j["rows"] = d.rows();
  j["k"] = d.grid().k;
  j["n"] = d.grid().n;
  return j.dump();
}

}  // namespace grmirror
