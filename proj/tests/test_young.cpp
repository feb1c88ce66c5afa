#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "grmirror/young.hpp"

using namespace grmirror;

namespace {

YoungDiagram dg(int k, int n, std::vector<int> rows) {
  return YoungDiagram(GridShape{k, n}, std::move(rows));
}

std::vector<GridShape> small_grids(int max_cells) {
  std::vector<GridShape> out;
  for (int n = 2; n <= 16; ++n) {
    for (int k = 1; k < n; ++k) {
      if (k * (n - k) <= max_cells) out.push_back(GridShape{k, n});
    }
  }
  return out;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("enumeration matches the Gr(2,5) basis listing") {
  const auto all = enumerate_diagrams(GridShape{2, 5});
  const std::vector<std::vector<int>> expected = {
      {0, 0}, {1, 0}, {2, 0}, {1, 1}, {3, 0}, {2, 1}, {3, 1}, {2, 2}, {3, 2}, {3, 3}};
  REQUIRE(all.size() == expected.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].rows() == expected[i]);
  }
}

TEST_CASE("enumeration counts and endpoints") {
  CHECK(enumerate_diagrams(GridShape{1, 2}).size() == 2);
  CHECK(enumerate_diagrams(GridShape{3, 6}).size() == 20);
  for (const GridShape& g : small_grids(16)) {
    const auto all = enumerate_diagrams(g);
    CHECK(static_cast<long long>(all.size()) == binom(g.n, g.k));
    CHECK(all.front() == YoungDiagram::empty(g));
    CHECK(all.back() == YoungDiagram::full(g));
    // strictly sorted: no duplicates under the enumeration order
    CHECK(std::set<YoungDiagram>(all.begin(), all.end()).size() == all.size());
  }
}

TEST_CASE("border steps anchors") {
  SUBCASE("empty diagram has horizontal steps 1..n-k") {
    for (const GridShape& g : small_grids(12)) {
      const StepSets s = border_steps(YoungDiagram::empty(g));
      std::vector<int> expect;
      for (int t = 1; t <= g.cols(); ++t) expect.push_back(t);
      CHECK(s.horizontal == expect);
    }
  }
  SUBCASE("full grid has vertical steps 1..k") {
    for (const GridShape& g : small_grids(12)) {
      const StepSets s = border_steps(YoungDiagram::full(g));
      std::vector<int> expect;
      for (int t = 1; t <= g.k; ++t) expect.push_back(t);
      CHECK(s.vertical == expect);
    }
  }
  SUBCASE("closed form and complementarity") {
    for (const GridShape& g : small_grids(12)) {
      for (const YoungDiagram& d : enumerate_diagrams(g)) {
        const StepSets s = border_steps(d);
        for (int j = 1; j <= g.k; ++j) {
          CHECK(d.row(j - 1) == g.cols() - s.vertical[static_cast<std::size_t>(j - 1)] + j);
        }
        std::vector<int> both = s.vertical;
        both.insert(both.end(), s.horizontal.begin(), s.horizontal.end());
        std::sort(both.begin(), both.end());
        std::vector<int> expect;
        for (int t = 1; t <= g.n; ++t) expect.push_back(t);
        CHECK(both == expect);
      }
    }
  }
}

TEST_CASE("boundary rectangles are the cyclic shifts") {
  const GridShape g{2, 5};
  const auto bd = boundary_rectangles(g);
  REQUIRE(bd.size() == 5);
  CHECK(bd[0] == YoungDiagram::empty(g));
  for (int i = 0; i < 5; ++i) {
    const StepSets s = border_steps(bd[static_cast<std::size_t>(i)]);
    std::vector<int> expect;
    for (int t = 1; t <= g.cols(); ++t) expect.push_back((t - 1 + i) % g.n + 1);
    std::sort(expect.begin(), expect.end());
    CHECK(s.horizontal == expect);
  }
  // the full cycle, as listed: empty, (3), (3,3), (2,2), (1,1)
  CHECK(bd[1].rows() == std::vector<int>{3, 0});
  CHECK(bd[2].rows() == std::vector<int>{3, 3});
  CHECK(bd[3].rows() == std::vector<int>{2, 2});
  CHECK(bd[4].rows() == std::vector<int>{1, 1});
}

TEST_CASE("transpose") {
  CHECK(transpose(dg(2, 5, {3, 1})).rows() == std::vector<int>{2, 1, 1});
  for (const GridShape& g : small_grids(12)) {
    CHECK(transpose(YoungDiagram::empty(g)) == YoungDiagram::empty(g.transposed()));
    CHECK(transpose(YoungDiagram::full(g)) == YoungDiagram::full(g.transposed()));
    for (const YoungDiagram& d : enumerate_diagrams(g)) {
      CHECK(transpose(transpose(d)) == d);
    }
  }
}

TEST_CASE("poincare dual") {
  CHECK(poincare_dual(dg(3, 7, {4, 3, 0})).rows() == std::vector<int>{4, 1, 0});
  for (const GridShape& g : small_grids(12)) {
    CHECK(poincare_dual(YoungDiagram::empty(g)) == YoungDiagram::full(g));
    for (const YoungDiagram& d : enumerate_diagrams(g)) {
      CHECK(poincare_dual(poincare_dual(d)) == d);
      CHECK(d.boxes() + poincare_dual(d).boxes() == g.cells());
    }
  }
}

TEST_CASE("rectangle classification") {
  SUBCASE("Gr(2,5) boundary set") {
    std::set<std::vector<int>> boundary;
    for (const YoungDiagram& d : enumerate_diagrams(GridShape{2, 5})) {
      if (classify_rectangle(d) == RectKind::Boundary) boundary.insert(d.rows());
    }
    const std::set<std::vector<int>> expected = {
        {0, 0}, {3, 0}, {3, 3}, {2, 2}, {1, 1}};
    CHECK(boundary == expected);
  }
  SUBCASE("Gr(3,7) interior set") {
    std::set<std::vector<int>> interior;
    for (const YoungDiagram& d : enumerate_diagrams(GridShape{3, 7})) {
      if (classify_rectangle(d) == RectKind::Interior) interior.insert(d.rows());
    }
    const std::set<std::vector<int>> expected = {
        {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {1, 1, 0}, {2, 2, 0}, {3, 3, 0}};
    CHECK(interior == expected);
  }
  SUBCASE("counts") {
    CHECK(classify_rectangle(dg(2, 5, {2, 1})) == RectKind::NotRectangular);
    for (const GridShape& g : small_grids(16)) {
      int rect = 0;
      int boundary = 0;
      for (const YoungDiagram& d : enumerate_diagrams(g)) {
        const RectKind kind = classify_rectangle(d);
        if (kind != RectKind::NotRectangular) ++rect;
        if (kind == RectKind::Boundary) ++boundary;
      }
      CHECK(rect == g.cells() + 1);
      CHECK(boundary == g.n);
      CHECK(static_cast<int>(rectangles(g).size()) == g.cells() + 1);
      CHECK(static_cast<int>(boundary_rectangles(g).size()) == g.n);
    }
  }
}

TEST_CASE("pieri expansion") {
  SUBCASE("worked Gr(2,5) cases") {
    const PieriExpansion e1 = pieri_expand(dg(2, 5, {2, 1}));
    REQUIRE(e1.classical.size() == 2);
    CHECK(e1.classical[0].rows() == std::vector<int>{3, 1});
    CHECK(e1.classical[1].rows() == std::vector<int>{2, 2});
    CHECK(!e1.quantum.has_value());

    const PieriExpansion e2 = pieri_expand(dg(2, 5, {3, 2}));
    REQUIRE(e2.quantum.has_value());
    CHECK(e2.quantum->rows() == std::vector<int>{1, 0});

    CHECK(!pieri_expand(dg(2, 5, {2, 2})).quantum.has_value());
  }
  SUBCASE("box counts") {
    for (const GridShape& g : small_grids(12)) {
      for (const YoungDiagram& d : enumerate_diagrams(g)) {
        const PieriExpansion e = pieri_expand(d);
        for (const YoungDiagram& c : e.classical) CHECK(c.boxes() == d.boxes() + 1);
        if (e.quantum) CHECK(e.quantum->boxes() == d.boxes() - g.n + 1);
      }
    }
  }
  SUBCASE("boundary rectangles expand to a single diagram") {
    for (const GridShape& g : small_grids(16)) {
      for (const YoungDiagram& d : boundary_rectangles(g)) {
        const PieriExpansion e = pieri_expand(d);
        CHECK(e.classical.size() + (e.quantum ? 1 : 0) == 1);
        // the single target commutes with transposition
        const PieriExpansion et = pieri_expand(transpose(d));
        const YoungDiagram target = e.quantum ? *e.quantum : e.classical.front();
        const YoungDiagram ttarget = et.quantum ? *et.quantum : et.classical.front();
        CHECK(transpose(target) == ttarget);
      }
    }
  }
}

TEST_CASE("serialization forms") {
  const YoungDiagram d = dg(2, 5, {3, 1});
  CHECK(to_text(d) == "(3,1)");
  CHECK(to_json_string(d) == R"({"k":2,"n":5,"rows":[3,1]})");
}

TEST_CASE("invalid diagrams are rejected") {
  CHECK_THROWS(dg(2, 5, {1, 2}));
  CHECK_THROWS(dg(2, 5, {4, 0}));
  CHECK_THROWS(dg(2, 5, {1, 1, 1}));
  CHECK_THROWS(YoungDiagram::empty(GridShape{3, 3}));
}
