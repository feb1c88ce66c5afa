#include "grmirror/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace grmirror {

namespace {

constexpr double kSize = 600.0;
constexpr double kCenter = 300.0;
constexpr double kRadius = 250.0;  // pixel radius of the maximum modulus

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v + 0.0);  // +0.0 folds -0 into 0
  return buf;
}

struct Point {
  double x;
  double y;
};

Point place(const std::complex<double>& z, double max_modulus) {
  const double scale = max_modulus > 0 ? kRadius / max_modulus : 0.0;
  return Point{kCenter + z.real() * scale, kCenter - z.imag() * scale};
}

void svg_header(std::ostringstream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
      << "viewBox=\"0 0 " << fmt(kSize) << " " << fmt(kSize) << "\">\n";
  out << "<rect width=\"" << fmt(kSize) << "\" height=\"" << fmt(kSize)
      << "\" fill=\"white\"/>\n";
  // Axes and the max-modulus guide circle.
  out << "<line x1=\"0\" y1=\"" << fmt(kCenter) << "\" x2=\"" << fmt(kSize) << "\" y2=\""
      << fmt(kCenter) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << fmt(kCenter) << "\" y1=\"0\" x2=\"" << fmt(kCenter) << "\" y2=\""
      << fmt(kSize) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  out << "<circle cx=\"" << fmt(kCenter) << "\" cy=\"" << fmt(kCenter) << "\" r=\"" << fmt(kRadius)
      << "\" fill=\"none\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
}

void draw_group(std::ostringstream& out, const SpectralGroup& g, double max_modulus, bool filled) {
  const Point p = place(g.value, max_modulus);
  const char* stroke = g.max_modulus ? "#b03030" : "#304d80";
  const char* fill = g.max_modulus ? "#b03030" : "#304d80";
  out << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"5\" fill=\""
      << (filled ? fill : "none") << "\" stroke=\"" << stroke << "\" stroke-width=\"2\"/>\n";
  for (int ring = 1; ring < g.multiplicity; ++ring) {
    out << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\""
        << fmt(5.0 + 4.0 * ring) << "\" fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"1.5\"/>\n";
  }
}

}  // namespace

std::string render_flower_svg(const SpectralSummary& s) {
  std::ostringstream out;
  svg_header(out);
  out << "<text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"14\">Gr(" << s.grid.k
      << "," << s.grid.n << ") eigenvalues of c1*</text>\n";
  for (const SpectralGroup& g : s.groups) {
    draw_group(out, g, s.max_modulus, true);
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_branes_svg(const BranesSummary& b) {
  std::ostringstream out;
  svg_header(out);
  out << "<text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"14\">Gr(" << b.grid.k
      << "," << b.grid.n << ") summands with torus objects filled</text>\n";
  for (std::size_t g = 0; g < b.spectral.groups.size(); ++g) {
    draw_group(out, b.spectral.groups[g], b.spectral.max_modulus, b.occupied[g] != 0);
  }
  out << "</svg>\n";
  return out.str();
}

namespace {

void group_line(std::ostringstream& out, const SpectralGroup& g) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "  % .9f %+.9fi  |.|=%.9f  mult=%d%s", g.value.real(),
                g.value.imag(), g.modulus, g.multiplicity, g.max_modulus ? "  max" : "");
  out << buf;
}

}  // namespace

std::string render_flower_text(const SpectralSummary& s) {
  std::ostringstream out;
  out << "Gr(" << s.grid.k << "," << s.grid.n << "): " << s.groups.size()
      << " distinct eigenvalues of c1*\n";
  for (const SpectralGroup& g : s.groups) {
    group_line(out, g);
    out << "\n";
  }
  return out.str();
}

std::string render_branes_text(const BranesSummary& b) {
  std::ostringstream out;
  out << "Gr(" << b.grid.k << "," << b.grid.n << "): " << b.spectral.groups.size()
      << " eigenvalue groups, value multiset match="
      << (b.value_multiset_match ? "yes" : "no") << "\n";
  for (std::size_t g = 0; g < b.spectral.groups.size(); ++g) {
    group_line(out, b.spectral.groups[g]);
    out << (b.occupied[g] ? "  occupied, witnesses:" : "  hollow");
    for (const RootSet& I : b.witnesses[g]) {
      out << " {";
      for (std::size_t t = 0; t < I.exponents.size(); ++t) {
        if (t > 0) out << ",";
        out << I.exponents[t];
      }
      out << "}";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace grmirror
