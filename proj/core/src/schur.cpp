#include "grmirror/schur.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace grmirror {

namespace {

std::vector<int> base_exponents(int n, int sign) {
  if (n < 1) throw std::invalid_argument("RootSet requires n >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("RootSet sign must be +1 or -1");
  std::vector<int> base(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    base[static_cast<std::size_t>(t)] = 2 * t + (sign == 1 ? 0 : 1);
  }
  return base;
}

// Rows of lam padded with zeros to m; throws if lam needs more than m rows.
std::vector<int> padded_rows(const YoungDiagram& lam, int m) {
  std::vector<int> rows = lam.rows();
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (static_cast<int>(rows.size()) > m) {
    throw std::invalid_argument("diagram has more nonzero rows than variables");
  }
  rows.resize(static_cast<std::size_t>(m), 0);
  return rows;
}

std::vector<int> column_lengths(const std::vector<int>& rows) {
  const int width = rows.empty() ? 0 : rows.front();
  std::vector<int> cols(static_cast<std::size_t>(width), 0);
  for (int r : rows) {
    for (int c = 0; c < r; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return cols;
}

}  // namespace

RootSet make_root_set(int n, std::vector<int> exponents) {
  RootSet I;
  I.n = n;
  I.exponents = std::move(exponents);
  std::sort(I.exponents.begin(), I.exponents.end());
  if (I.exponents.empty()) throw std::invalid_argument("RootSet must be nonempty");
  const int parity = I.exponents.front() % 2;
  int prev = -1;
  for (int e : I.exponents) {
    if (e < 0 || e >= 2 * n) throw std::invalid_argument("RootSet exponent out of range");
    if (e == prev) throw std::invalid_argument("RootSet exponents must be distinct");
    if (e % 2 != parity) throw std::invalid_argument("RootSet exponents must share parity");
    prev = e;
  }
  I.sign = parity == 0 ? +1 : -1;
  return I;
}

std::vector<RootSet> enumerate_rootsets(int n, int m, int sign) {
  if (m < 1 || m > n) throw std::invalid_argument("enumerate_rootsets requires 1 <= m <= n");
  const std::vector<int> base = base_exponents(n, sign);
  std::vector<RootSet> out;
  std::vector<int> pick(static_cast<std::size_t>(m));
  auto rec = [&](auto&& self, int from, int depth) -> void {
    if (depth == m) {
      std::vector<int> exps(static_cast<std::size_t>(m));
      for (int t = 0; t < m; ++t) exps[static_cast<std::size_t>(t)] = base[static_cast<std::size_t>(pick[static_cast<std::size_t>(t)])];
      out.push_back(make_root_set(n, std::move(exps)));
      return;
    }
    for (int i = from; i <= n - (m - depth); ++i) {
      pick[static_cast<std::size_t>(depth)] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

RootSet rotate(const RootSet& I) {
  std::vector<int> exps = I.exponents;
  for (int& e : exps) e = (e + 2) % (2 * I.n);
  return make_root_set(I.n, std::move(exps));
}

RootSet conjugate(const RootSet& I) {
  std::vector<int> exps = I.exponents;
  for (int& e : exps) e = (2 * I.n - e) % (2 * I.n);
  return make_root_set(I.n, std::move(exps));
}

RootSet closest_to_one(int n, int m, int sign) {
  std::vector<int> base = base_exponents(n, sign);
  std::sort(base.begin(), base.end(), [n](int a, int b) {
    const double ca = std::cos(std::numbers::pi * static_cast<double>(a) / static_cast<double>(n));
    const double cb = std::cos(std::numbers::pi * static_cast<double>(b) / static_cast<double>(n));
    if (ca != cb) return ca > cb;
    return a < b;
  });
  base.resize(static_cast<std::size_t>(m));
  return make_root_set(n, std::move(base));
}

CycInt schur_ssyt(const YoungDiagram& lam, const RootSet& I) {
  const int m = I.size();
  const int order = I.order();
  const std::vector<int> rows = padded_rows(lam, m);
  int height = 0;
  while (height < static_cast<int>(rows.size()) && rows[static_cast<std::size_t>(height)] > 0) ++height;
  CycInt out(order);
  if (height == 0) {
    out.add_term(0, 1);
    return out;
  }
  const std::vector<int> cols = column_lengths(rows);
  std::vector<std::vector<int>> tab(static_cast<std::size_t>(height));
  for (int r = 0; r < height; ++r) tab[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(rows[static_cast<std::size_t>(r)]));
  auto fill = [&](auto&& self, int r, int c, long long expsum) -> void {
    if (r == height) {
      out.add_term(expsum, 1);
      return;
    }
    const int nr = c + 1 < rows[static_cast<std::size_t>(r)] ? r : r + 1;
    const int nc = c + 1 < rows[static_cast<std::size_t>(r)] ? c + 1 : 0;
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, tab[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    // Labels below this cell in its column must still fit strictly increasing.
    const int hi = m - (cols[static_cast<std::size_t>(c)] - r - 1);
    for (int label = lo; label <= hi; ++label) {
      tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = label;
      self(self, nr, nc, expsum + I.exponents[static_cast<std::size_t>(label - 1)]);
    }
  };
  fill(fill, 0, 0, 0);
  return out;
}

std::vector<CycInt> elementary_symmetric(const RootSet& I) {
  const int m = I.size();
  const int order = I.order();
  std::vector<CycInt> e(static_cast<std::size_t>(m + 1), CycInt(order));
  e[0] = CycInt::integer(order, 1);
  for (int t = 0; t < m; ++t) {
    for (int c = t + 1; c >= 1; --c) {
      e[static_cast<std::size_t>(c)].add_shifted(e[static_cast<std::size_t>(c - 1)], I.exponents[static_cast<std::size_t>(t)]);
    }
  }
  return e;
}

CycInt schur_jacobi_trudi(const YoungDiagram& lam, const RootSet& I) {
  const int m = I.size();
  const int order = I.order();
  const std::vector<int> rows = padded_rows(lam, m);
  const std::vector<int> lamT = column_lengths(rows);
  const int size = static_cast<int>(lamT.size());
  if (size == 0) return CycInt::integer(order, 1);
  const std::vector<CycInt> e = elementary_symmetric(I);
  std::vector<std::vector<CycInt>> a(static_cast<std::size_t>(size), std::vector<CycInt>(static_cast<std::size_t>(size), CycInt(order)));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const int idx = lamT[static_cast<std::size_t>(i)] - i + j;
      if (idx >= 0 && idx <= m) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(idx)];
    }
  }
  return determinant(a);
}

CycInt alternant(const YoungDiagram& lam, const RootSet& I) {
  const int m = I.size();
  const int order = I.order();
  const std::vector<int> rows = padded_rows(lam, m);
  std::vector<std::vector<CycInt>> a(static_cast<std::size_t>(m), std::vector<CycInt>(static_cast<std::size_t>(m), CycInt(order)));
  for (int t = 0; t < m; ++t) {
    const long long exp = rows[static_cast<std::size_t>(m - 1 - t)] + t;
    for (int j = 0; j < m; ++j) {
      a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] =
          CycInt::zeta_power(order, exp * I.exponents[static_cast<std::size_t>(j)]);
    }
  }
  return determinant(a);
}

CycInt vandermonde(const RootSet& I) {
  const int m = I.size();
  const int order = I.order();
  CycInt prod = CycInt::integer(order, 1);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const CycInt diff = CycInt::zeta_power(order, I.exponents[static_cast<std::size_t>(j)]) -
                          CycInt::zeta_power(order, I.exponents[static_cast<std::size_t>(i)]);
      prod = prod * diff;
    }
  }
  return prod;
}

BigInt hook_content_count(const YoungDiagram& lam, int m) {
  const std::vector<int> rows = padded_rows(lam, m);
  const std::vector<int> lamT = column_lengths(rows);
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    for (int j = 0; j < rows[static_cast<std::size_t>(i)]; ++j) {
      num *= m + (j - i);
      const int hook = (rows[static_cast<std::size_t>(i)] - j) + (lamT[static_cast<std::size_t>(j)] - i) - 1;
      den *= hook;
    }
  }
  if (den == 0 || num % den != 0) {
    throw std::logic_error("hook_content_count: non-exact division");
  }
  return num / den;
}

SchurEvaluator::SchurEvaluator(GridShape grid) : grid_(grid), diagrams_(enumerate_diagrams(grid)) {
  const int k = grid_.k;
  empty_idx_ = index_of(YoungDiagram::empty(grid_));
  strips_.resize(diagrams_.size());
  // For each target lam, every mu interlacing it: lam_1 >= mu_1 >= lam_2 >= ...
  for (std::size_t t = 0; t < diagrams_.size(); ++t) {
    const std::vector<int>& lam = diagrams_[t].rows();
    std::vector<int> mu(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int row) -> void {
      if (row == k) {
        const YoungDiagram md(grid_, mu);
        strips_[t].push_back(Strip{index_of(md), diagrams_[t].boxes() - md.boxes()});
        return;
      }
      const int lo = row + 1 < k ? lam[static_cast<std::size_t>(row + 1)] : 0;
      for (int v = lo; v <= lam[static_cast<std::size_t>(row)]; ++v) {
        mu[static_cast<std::size_t>(row)] = v;
        self(self, row + 1);
      }
    };
    rec(rec, 0);
  }
}

int SchurEvaluator::index_of(const YoungDiagram& d) const {
  const auto it = std::find(diagrams_.begin(), diagrams_.end(), d);
  if (it == diagrams_.end()) throw std::invalid_argument("diagram is not in this grid");
  return static_cast<int>(it - diagrams_.begin());
}

std::vector<CycInt> SchurEvaluator::values(const RootSet& I) const {
  if (I.size() != grid_.k) {
    throw std::invalid_argument("SchurEvaluator: |I| must equal the number of rows of the grid");
  }
  const int order = I.order();
  std::vector<CycInt> cur(diagrams_.size(), CycInt(order));
  cur[static_cast<std::size_t>(empty_idx_)] = CycInt::integer(order, 1);
  for (int v = 0; v < grid_.k; ++v) {
    const int g = I.exponents[static_cast<std::size_t>(v)];
    std::vector<CycInt> next(diagrams_.size(), CycInt(order));
    for (std::size_t t = 0; t < diagrams_.size(); ++t) {
      for (const Strip& s : strips_[t]) {
        next[t].add_shifted(cur[static_cast<std::size_t>(s.from)], static_cast<long long>(g) * s.diff);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace grmirror
