#include "grmirror/gelfand_cetlin.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace grmirror {

namespace {

int flat(const GridShape& grid, int i, int j) {
  // (i,j) with 1 <= i <= k, 1 <= j <= n-k, lexicographic.
  return (i - 1) * grid.cols() + (j - 1);
}

std::string face_kind_name(FaceKind kind) {
  switch (kind) {
    case FaceKind::HBrick: return "hbrick";
    case FaceKind::VBrick: return "vbrick";
    case FaceKind::CornerTopRight: return "corner_top_right";
    case FaceKind::CornerBottomLeft: return "corner_bottom_left";
  }
  return "?";
}

// p_{rxc} as a monomial exponent bump; degenerate rectangles contribute 1.
void bump_rectangle(const GridShape& grid, std::vector<int>& exps, int r, int c, int delta) {
  if (r <= 0 || c <= 0) return;
  if (r > grid.k || c > grid.cols()) throw std::logic_error("rectangle index out of grid");
  exps[static_cast<std::size_t>(flat(grid, r, c))] += delta;
}

}  // namespace

std::vector<FaceGraph> codim1_faces(GridShape grid) {
  if (!grid.valid()) throw std::invalid_argument("codim1_faces: invalid grid");
  const int k = grid.k;
  const int cols = grid.cols();
  const int cells = grid.cells();
  std::vector<FaceGraph> out;
  for (int i = 1; i <= k - 1; ++i) {
    for (int j = 1; j <= cols; ++j) {
      FaceGraph f{grid, FaceKind::HBrick, i, j, std::vector<int>(static_cast<std::size_t>(cells), 0)};
      f.normal[static_cast<std::size_t>(flat(grid, i, j))] = 1;
      f.normal[static_cast<std::size_t>(flat(grid, i + 1, j))] = -1;
      out.push_back(std::move(f));
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= cols - 1; ++j) {
      FaceGraph f{grid, FaceKind::VBrick, i, j, std::vector<int>(static_cast<std::size_t>(cells), 0)};
      f.normal[static_cast<std::size_t>(flat(grid, i, j))] = -1;
      f.normal[static_cast<std::size_t>(flat(grid, i, j + 1))] = 1;
      out.push_back(std::move(f));
    }
  }
  FaceGraph tr{grid, FaceKind::CornerTopRight, 0, 0, std::vector<int>(static_cast<std::size_t>(cells), 0)};
  tr.normal[static_cast<std::size_t>(flat(grid, 1, cols))] = -1;
  out.push_back(std::move(tr));
  FaceGraph bl{grid, FaceKind::CornerBottomLeft, 0, 0, std::vector<int>(static_cast<std::size_t>(cells), 0)};
  bl.normal[static_cast<std::size_t>(flat(grid, k, 1))] = 1;
  out.push_back(std::move(bl));
  return out;
}

VarRegistryPtr disk_registry(GridShape grid) {
  std::vector<std::string> names;
  for (int i = 1; i <= grid.k; ++i) {
    for (int j = 1; j <= grid.cols(); ++j) {
      names.push_back("x_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
  }
  return std::make_shared<VarRegistry>(std::move(names));
}

VarRegistryPtr chart_registry(GridShape grid) {
  std::vector<std::string> names;
  for (int i = 1; i <= grid.k; ++i) {
    for (int j = 1; j <= grid.cols(); ++j) {
      names.push_back("p_{" + std::to_string(i) + "x" + std::to_string(j) + "}");
    }
  }
  return std::make_shared<VarRegistry>(std::move(names));
}

LaurentPoly disk_potential(GridShape grid) {
  if (!grid.valid()) throw std::invalid_argument("disk_potential: invalid grid");
  const int k = grid.k;
  const int cols = grid.cols();
  LaurentPoly w(disk_registry(grid));
  std::vector<int> exps(static_cast<std::size_t>(grid.cells()));
  auto term = [&](auto&& fill) {
    std::fill(exps.begin(), exps.end(), 0);
    fill();
    w.add_term(exps, 1);
  };
  for (int i = 1; i <= k - 1; ++i) {
    for (int j = 1; j <= cols; ++j) {
      term([&] {
        exps[static_cast<std::size_t>(flat(grid, i, j))] = 1;
        exps[static_cast<std::size_t>(flat(grid, i + 1, j))] = -1;
      });
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= cols - 1; ++j) {
      term([&] {
        exps[static_cast<std::size_t>(flat(grid, i, j + 1))] = 1;
        exps[static_cast<std::size_t>(flat(grid, i, j))] = -1;
      });
    }
  }
  term([&] { exps[static_cast<std::size_t>(flat(grid, 1, cols))] = -1; });
  term([&] { exps[static_cast<std::size_t>(flat(grid, k, 1))] = 1; });
  return w;
}

LaurentPoly chart_potential(GridShape grid) {
  if (!grid.valid()) throw std::invalid_argument("chart_potential: invalid grid");
  const int k = grid.k;
  const int cols = grid.cols();
  LaurentPoly w(chart_registry(grid));
  std::vector<int> exps(static_cast<std::size_t>(grid.cells()));
  auto term = [&](auto&& fill) {
    std::fill(exps.begin(), exps.end(), 0);
    fill();
    w.add_term(exps, 1);
  };
  term([&] { bump_rectangle(grid, exps, 1, 1, 1); });
  for (int i = 2; i <= k; ++i) {
    for (int j = 1; j <= cols; ++j) {
      term([&] {
        bump_rectangle(grid, exps, i, j, 1);
        bump_rectangle(grid, exps, i - 2, j - 1, 1);
        bump_rectangle(grid, exps, i - 1, j - 1, -1);
        bump_rectangle(grid, exps, i - 1, j, -1);
      });
    }
  }
  term([&] {
    bump_rectangle(grid, exps, k - 1, cols - 1, 1);
    bump_rectangle(grid, exps, k, cols, -1);
  });
  for (int i = 1; i <= k; ++i) {
    for (int j = 2; j <= cols; ++j) {
      term([&] {
        bump_rectangle(grid, exps, i, j, 1);
        bump_rectangle(grid, exps, i - 1, j - 2, 1);
        bump_rectangle(grid, exps, i - 1, j - 1, -1);
        bump_rectangle(grid, exps, i, j - 1, -1);
      });
    }
  }
  return w;
}

std::vector<SignedMonomial> theta_substitution(GridShape grid) {
  if (!grid.valid()) throw std::invalid_argument("theta_substitution: invalid grid");
  std::vector<SignedMonomial> images;
  for (int i = 1; i <= grid.k; ++i) {
    for (int j = 1; j <= grid.cols(); ++j) {
      SignedMonomial im;
      im.sign = +1;
      im.exponents.assign(static_cast<std::size_t>(grid.cells()), 0);
      bump_rectangle(grid, im.exponents, grid.k + 1 - i, j, 1);
      bump_rectangle(grid, im.exponents, grid.k - i, j - 1, -1);
      images.push_back(std::move(im));
    }
  }
  return images;
}

bool verify_pullback(GridShape grid) {
  const LaurentPoly pulled =
      substitute_monomials(disk_potential(grid), theta_substitution(grid), chart_registry(grid));
  return pulled == chart_potential(grid);
}

std::string faces_to_json(const std::vector<FaceGraph>& faces) {
  nlohmann::json out = nlohmann::json::array();
  for (const FaceGraph& f : faces) {
    nlohmann::json jf;
    jf["kind"] = face_kind_name(f.kind);
    if (f.kind == FaceKind::HBrick || f.kind == FaceKind::VBrick) {
      jf["i"] = f.i;
      jf["j"] = f.j;
    }
    jf["normal"] = f.normal;
    out.push_back(std::move(jf));
  }
  return out.dump(2);
}

std::string potential_to_json(GridShape grid) {
  const auto images = theta_substitution(grid);
  const auto xreg = disk_registry(grid);
  const auto preg = chart_registry(grid);
  nlohmann::json subst = nlohmann::json::array();
  for (int v = 0; v < xreg->size(); ++v) {
    std::string image;
    const SignedMonomial& im = images[static_cast<std::size_t>(v)];
    for (int t = 0; t < preg->size(); ++t) {
      const int e = im.exponents[static_cast<std::size_t>(t)];
      if (e == 0) continue;
      if (!image.empty()) image += " * ";
      image += preg->name(t);
      if (e != 1) image += "^" + std::to_string(e);
    }
    if (image.empty()) image = "1";
    subst.push_back({{"variable", xreg->name(v)}, {"image", image}});
  }
  nlohmann::json j;
  j["k"] = grid.k;
  j["n"] = grid.n;
  j["disk_potential"] = disk_potential(grid).to_text();
  j["chart_potential"] = chart_potential(grid).to_text();
  j["substitution"] = std::move(subst);
  j["pullback_verified"] = verify_pullback(grid);
  return j.dump(2);
}

}  // namespace grmirror
