#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace grmirror {

/// Ambient k x (n-k) grid of Gr(k,n).
struct GridShape {
  int k = 0;
  int n = 0;

  int cols() const { return n - k; }
  int cells() const { return k * (n - k); }
  GridShape transposed() const { return GridShape{n - k, n}; }
  bool valid() const { return k >= 1 && k < n; }

  friend bool operator==(const GridShape&, const GridShape&) = default;
  friend auto operator<=>(const GridShape&, const GridShape&) = default;
};

/// Partition d1 >= d2 >= ... >= dk >= 0 with every di <= n-k.
/// Rows are stored padded with zeros to length k; this is the canonical
/// representation, step sets are always derived from it.
class YoungDiagram {
 public:
  YoungDiagram(GridShape grid, std::vector<int> rows);

  static YoungDiagram empty(GridShape grid);
  static YoungDiagram full(GridShape grid);

  const GridShape& grid() const { return grid_; }
  const std::vector<int>& rows() const { return rows_; }
  int row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  int boxes() const;
  bool is_empty() const { return boxes() == 0; }

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  GridShape grid_;
  std::vector<int> rows_;
};

/// Positions of the down/left moves along the border lattice path,
/// numbered 1..n starting from the top-right corner of the grid.
struct StepSets {
  std::vector<int> vertical;    // size k, strictly increasing
  std::vector<int> horizontal;  // size n-k, complement of vertical in {1..n}
};

enum class RectKind { NotRectangular, Boundary, Interior };

struct PieriExpansion {
  std::vector<YoungDiagram> classical;   // one box added, all valid ways
  std::optional<YoungDiagram> quantum;   // first row and column erased, if full
};

/// All C(n,k) diagrams of the grid, ordered by box count and then by
/// lexicographic order on vertical-step sets; starts at the empty diagram
/// and ends at the full grid.
std::vector<YoungDiagram> enumerate_diagrams(GridShape grid);

StepSets border_steps(const YoungDiagram& d);

/// Transpose into the (n-k) x k grid; involutive.
YoungDiagram transpose(const YoungDiagram& d);

/// Complement in the grid rotated by pi; involutive.
YoungDiagram poincare_dual(const YoungDiagram& d);

RectKind classify_rectangle(const YoungDiagram& d);

PieriExpansion pieri_expand(const YoungDiagram& d);

/// The r x c rectangle as a diagram; r == 0 or c == 0 gives the empty diagram.
YoungDiagram rectangle(GridShape grid, int r, int c);

/// All k(n-k)+1 rectangles including the empty one, ordered (r, c).
std::vector<YoungDiagram> rectangles(GridShape grid);

/// The n boundary rectangles in cyclic order: entry s has horizontal steps
/// {1..n-k} shifted by s mod n, so entry 0 is the empty diagram.
std::vector<YoungDiagram> boundary_rectangles(GridShape grid);

std::string to_text(const YoungDiagram& d);         // "(d1,...,dk)"
std::string to_json_string(const YoungDiagram& d);  // {"rows":[...],"k":...,"n":...}

}  // namespace grmirror
