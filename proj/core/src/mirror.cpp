#include "grmirror/mirror.hpp"

#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "grmirror/parallel.hpp"

namespace grmirror {

int mirror_sign(GridShape grid) { return (grid.n - grid.k) % 2 == 0 ? -1 : +1; }

std::vector<RootSet> mirror_rootsets(GridShape grid) {
  return enumerate_rootsets(grid.n, grid.n - grid.k, mirror_sign(grid));
}

RootSet mirror_closest_rootset(GridShape grid) {
  return closest_to_one(grid.n, grid.n - grid.k, mirror_sign(grid));
}

RootSet complement_label(GridShape grid, const RootSet& I) {
  if (I.n != grid.n || I.size() != grid.n - grid.k || I.sign != mirror_sign(grid)) {
    throw std::invalid_argument("complement_label: not a mirror-side root set");
  }
  const int n = grid.n;
  std::vector<bool> in_set(static_cast<std::size_t>(2 * n), false);
  for (int e : I.exponents) in_set[static_cast<std::size_t>(e)] = true;
  std::vector<int> exps;
  const int parity = I.sign == 1 ? 0 : 1;
  for (int t = 0; t < n; ++t) {
    const int e = 2 * t + parity;
    if (!in_set[static_cast<std::size_t>(e)]) exps.push_back((e + n) % (2 * n));
  }
  return make_root_set(n, std::move(exps));
}

DihedralElement compose(const DihedralElement& a, const DihedralElement& b, int n) {
  DihedralElement g;
  g.flip = a.flip != b.flip;
  g.t = ((a.t + (a.flip ? -b.t : b.t)) % n + n) % n;
  return g;
}

std::vector<DihedralElement> dihedral_elements(int n) {
  std::vector<DihedralElement> out;
  for (int f = 0; f < 2; ++f) {
    for (int t = 0; t < n; ++t) out.push_back(DihedralElement{t, f != 0});
  }
  return out;
}

RootSet dihedral_act(const DihedralElement& g, const RootSet& I) {
  RootSet out = g.flip ? conjugate(I) : I;
  for (int t = 0; t < g.t; ++t) out = rotate(out);
  return out;
}

CycInt plucker_minor(const RootSet& I, const YoungDiagram& d) {
  const int m = d.grid().cols();
  if (I.size() != m) {
    throw std::invalid_argument("plucker_minor: |I| must be n-k");
  }
  const int order = I.order();
  const StepSets steps = border_steps(d);
  std::vector<std::vector<CycInt>> a(static_cast<std::size_t>(m),
                                     std::vector<CycInt>(static_cast<std::size_t>(m), CycInt(order)));
  for (int t = 0; t < m; ++t) {
    const long long row = steps.horizontal[static_cast<std::size_t>(t)] - 1;
    for (int j = 0; j < m; ++j) {
      a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] =
          CycInt::zeta_power(order, row * I.exponents[static_cast<std::size_t>(j)]);
    }
  }
  return determinant(a);
}

CycInt critical_value(GridShape grid, const RootSet& I) {
  CycInt sum(I.order());
  for (int e : I.exponents) sum.add_term(e, 1);
  return sum * CycInt::integer(I.order(), grid.n);
}

namespace {

// Per-grid machinery shared by all root sets: the transposed-grid evaluator
// and the rectangle lookup table.
class ChartEngine {
 public:
  explicit ChartEngine(GridShape grid)
      : grid_(grid), eval_(grid.transposed()), rects_(rectangles(grid)) {
    rect_idx_.reserve(rects_.size());
    for (const YoungDiagram& r : rects_) rect_idx_.push_back(eval_.index_of(transpose(r)));
  }

  const GridShape& grid() const { return grid_; }
  const SchurEvaluator& eval() const { return eval_; }

  ChartReport report(const RootSet& I, bool check_alternants) const {
    const std::vector<CycInt> values = eval_.values(I);
    return report_from_values(I, values, check_alternants);
  }

  ChartReport report_from_values(const RootSet& I, const std::vector<CycInt>& values,
                                 bool check_alternants) const {
    ChartReport out;
    out.I = I;
    out.member = true;
    for (std::size_t t = 0; t < rects_.size(); ++t) {
      const CycInt& v = values[static_cast<std::size_t>(rect_idx_[t])];
      const bool zero = v.is_zero();
      if (check_alternants) {
        const bool alt_zero = alternant(transpose(rects_[t]), I).is_zero();
        if (alt_zero != zero) {
          throw std::logic_error("chart_report: alternant and Schur-value routes disagree");
        }
      }
      if (zero) out.member = false;
      out.rectangle_values.emplace_back(rects_[t], v);
    }
    out.value = critical_value(grid_, I);
    out.value_f = out.value.to_complex();
    return out;
  }

 private:
  GridShape grid_;
  SchurEvaluator eval_;
  std::vector<YoungDiagram> rects_;
  std::vector<int> rect_idx_;
};

void check_mirror_rootset(GridShape grid, const RootSet& I) {
  if (I.n != grid.n || I.size() != grid.n - grid.k || I.sign != mirror_sign(grid)) {
    throw std::invalid_argument("expected n-k roots of x^n = (-1)^(n-k+1)");
  }
}

std::string exps_str(const RootSet& I) {
  std::string s = "{";
  for (std::size_t t = 0; t < I.exponents.size(); ++t) {
    if (t > 0) s += ",";
    s += std::to_string(I.exponents[t]);
  }
  return s + "}";
}

}  // namespace

ChartReport chart_report(GridShape grid, const RootSet& I, bool check_alternants) {
  check_mirror_rootset(grid, I);
  return ChartEngine(grid).report(I, check_alternants);
}

std::vector<ChartReport> all_chart_reports(GridShape grid, int jobs, bool check_alternants) {
  const ChartEngine engine(grid);
  const std::vector<RootSet> sets = mirror_rootsets(grid);
  std::vector<ChartReport> out(sets.size());
  parallel_for(jobs, sets.size(), [&](std::size_t i) {
    out[i] = engine.report(sets[i], check_alternants);
  });
  return out;
}

EquivarianceReport verify_equivariance(GridShape grid, int jobs) {
  const ChartEngine engine(grid);
  const std::vector<RootSet> sets = mirror_rootsets(grid);
  std::map<std::vector<int>, int> set_index;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    set_index.emplace(sets[i].exponents, static_cast<int>(i));
  }
  std::vector<std::vector<CycInt>> values(sets.size());
  parallel_for(jobs, sets.size(), [&](std::size_t i) { values[i] = engine.eval().values(sets[i]); });

  const std::vector<YoungDiagram>& tdiagrams = engine.eval().diagrams();
  std::vector<int> pd_idx(tdiagrams.size());
  for (std::size_t t = 0; t < tdiagrams.size(); ++t) {
    pd_idx[t] = engine.eval().index_of(poincare_dual(tdiagrams[t]));
  }
  const int full_idx = engine.eval().index_of(YoungDiagram::full(grid.transposed()));

  std::vector<char> member(sets.size());
  std::vector<CycInt> value(sets.size(), CycInt(2 * grid.n));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const ChartReport rep = engine.report_from_values(sets[i], values[i], false);
    member[i] = rep.member ? 1 : 0;
    value[i] = rep.value;
  }

  EquivarianceReport out;
  out.sets_checked = static_cast<int>(sets.size());
  const std::vector<DihedralElement> group = dihedral_elements(grid.n);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const RootSet& I = sets[i];
    for (const DihedralElement& g : group) {
      const RootSet gI = dihedral_act(g, I);
      const int gi = set_index.at(gI.exponents);
      if (member[static_cast<std::size_t>(gi)] != member[i]) {
        out.violations.push_back("membership differs on orbit of I=" + exps_str(I) +
                                 " at t=" + std::to_string(g.t) + (g.flip ? " s" : ""));
      }
    }
    const int ri = set_index.at(rotate(I).exponents);
    if (!(value[static_cast<std::size_t>(ri)] - value[i].rotated()).is_zero()) {
      out.violations.push_back("value(rI) != zeta_n * value(I) for I=" + exps_str(I));
    }
    const int si = set_index.at(conjugate(I).exponents);
    if (!(value[static_cast<std::size_t>(si)] - value[i].conj()).is_zero()) {
      out.violations.push_back("value(sI) != conj(value(I)) for I=" + exps_str(I));
    }
    // Poincare-duality proportionality, in cross-multiplied form. The scalar
    // is S_fullgrid(I): S_PD(t)(I) = conj(S_t(I)) * c_I for every t.
    const CycInt& c_I = values[i][static_cast<std::size_t>(full_idx)];
    const std::vector<CycInt>& w = values[static_cast<std::size_t>(si)];  // S_t(sI)
    bool pd_ok = true;
    for (std::size_t t = 0; t < tdiagrams.size() && pd_ok; ++t) {
      const CycInt& pd_val = values[i][static_cast<std::size_t>(pd_idx[t])];
      if (!(pd_val - values[i][t].conj() * c_I).is_zero()) pd_ok = false;
      // Literal cross-multiplication against the conjugated set's vector,
      // pivoting on the empty diagram where S = 1.
      if (!(pd_val * w[0] - c_I * w[t]).is_zero()) pd_ok = false;
    }
    if (!pd_ok) {
      out.violations.push_back("PD-conjugation proportionality fails for I=" + exps_str(I));
    }
  }
  return out;
}

BranesSummary branes_summary(GridShape grid, int jobs, double tol) {
  BranesSummary out;
  out.grid = grid;
  out.spectral = spectral_decomposition(grid, tol);
  const std::vector<ChartReport> reports = all_chart_reports(grid, jobs);

  std::map<std::vector<BigInt>, int> group_of;
  for (std::size_t g = 0; g < out.spectral.groups.size(); ++g) {
    group_of.emplace(out.spectral.groups[g].eigenvalue.canonical(), static_cast<int>(g));
  }
  out.occupied.assign(out.spectral.groups.size(), 0);
  out.witnesses.assign(out.spectral.groups.size(), {});
  std::vector<int> counts(out.spectral.groups.size(), 0);
  out.value_multiset_match = true;
  for (const ChartReport& rep : reports) {
    const auto it = group_of.find(rep.value.canonical());
    if (it == group_of.end()) {
      out.value_multiset_match = false;
      continue;
    }
    ++counts[static_cast<std::size_t>(it->second)];
    if (rep.member) {
      out.occupied[static_cast<std::size_t>(it->second)] = 1;
      out.witnesses[static_cast<std::size_t>(it->second)].push_back(rep.I);
    }
  }
  for (std::size_t g = 0; g < counts.size(); ++g) {
    if (counts[g] != out.spectral.groups[g].multiplicity) out.value_multiset_match = false;
  }
  return out;
}

bool occupancy_is_orbit_closed(const BranesSummary& b) {
  std::map<std::vector<BigInt>, char> occupied_of;
  for (std::size_t g = 0; g < b.spectral.groups.size(); ++g) {
    occupied_of.emplace(b.spectral.groups[g].eigenvalue.canonical(), b.occupied[g]);
  }
  for (std::size_t g = 0; g < b.spectral.groups.size(); ++g) {
    const CycInt& ev = b.spectral.groups[g].eigenvalue;
    const auto r = occupied_of.find(ev.rotated().canonical());
    const auto s = occupied_of.find(ev.conj().canonical());
    if (r == occupied_of.end() || s == occupied_of.end()) return false;
    if (r->second != b.occupied[g] || s->second != b.occupied[g]) return false;
  }
  return true;
}

std::vector<Holonomy> holonomy(GridShape grid, const RootSet& I) {
  check_mirror_rootset(grid, I);
  const ChartEngine engine(grid);
  const std::vector<CycInt> values = engine.eval().values(I);
  const ChartReport rep = engine.report_from_values(I, values, false);
  if (!rep.member) {
    throw std::domain_error("holonomy: critical point is outside the rectangular chart, "
                            "the object is not defined");
  }
  const GridShape tgrid = grid.transposed();
  const int m = grid.n - grid.k;
  std::vector<Holonomy> out;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= grid.k; ++j) {
      Holonomy h;
      h.i = i;
      h.j = j;
      h.num = values[static_cast<std::size_t>(engine.eval().index_of(rectangle(tgrid, m + 1 - i, j)))];
      h.den = values[static_cast<std::size_t>(engine.eval().index_of(rectangle(tgrid, m - i, j - 1)))];
      h.value = h.num.to_complex() / h.den.to_complex();
      out.push_back(std::move(h));
    }
  }
  return out;
}

std::string branes_to_json(const BranesSummary& b) {
  nlohmann::json j;
  j["k"] = b.grid.k;
  j["n"] = b.grid.n;
  j["value_multiset_match"] = b.value_multiset_match;
  nlohmann::json eigenvalues = nlohmann::json::array();
  for (std::size_t g = 0; g < b.spectral.groups.size(); ++g) {
    const SpectralGroup& sg = b.spectral.groups[g];
    nlohmann::json je;
    je["re"] = sg.value.real();
    je["im"] = sg.value.imag();
    je["modulus"] = sg.modulus;
    je["multiplicity"] = sg.multiplicity;
    je["max_modulus"] = sg.max_modulus;
    nlohmann::json sets = nlohmann::json::array();
    for (const RootSet& J : sg.members) sets.push_back(J.exponents);
    je["root_sets"] = std::move(sets);
    je["occupied"] = b.occupied[g] != 0;
    nlohmann::json wit = nlohmann::json::array();
    nlohmann::json witc = nlohmann::json::array();
    for (const RootSet& I : b.witnesses[g]) {
      wit.push_back(I.exponents);
      witc.push_back(complement_label(b.grid, I).exponents);
    }
    je["witnesses"] = std::move(wit);
    je["witnesses_complement"] = std::move(witc);
    eigenvalues.push_back(std::move(je));
  }
  j["eigenvalues"] = std::move(eigenvalues);
  return j.dump(2);
}

}  // namespace grmirror
