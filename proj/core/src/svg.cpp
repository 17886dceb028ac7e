#include "crossforge/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace crossforge {

namespace {

struct Style {
  double margin = 40.0;
  double width = 640.0;        // unrolled circumference
  double ring_gap = 48.0;      // between consecutive height units
  double cap_radius = 90.0;
  double cap_gap = 30.0;
  double vertex_radius = 3.5;
  double stroke = 1.0;
  const char* edge_color = "#3465a4";
  const char* cap_color = "#cc0000";
  const char* vertex_color = "#000000";
  const char* frame_color = "#888888";
  const char* font = "monospace";
  int font_size = 12;
};

constexpr Style kStyle{};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

struct Layout {
  const CylinderScene& scene;
  bool top_cap = false;
  bool bottom_cap = false;
  double rect_top = 0;
  double rect_h = 0;

  double sx(double x) const { return kStyle.margin + x * kStyle.width / static_cast<double>(scene.period); }
  double sy(double y) const { return rect_top + y * kStyle.ring_gap; }
  double total_w() const { return kStyle.width + 2 * kStyle.margin; }
  double total_h() const {
    double h = rect_top + rect_h + kStyle.margin + kStyle.font_size * 2;
    if (bottom_cap) h += 2 * kStyle.cap_radius + kStyle.cap_gap;
    return h;
  }
  double cap_cx() const { return kStyle.margin + kStyle.width / 2; }
  double cap_cy(CapSide side) const {
    return side == CapSide::Top ? kStyle.margin + kStyle.cap_radius
                                : rect_top + rect_h + kStyle.cap_gap + kStyle.cap_radius;
  }
  std::pair<double, double> rim(CapSide side, std::int64_t x) const {
    const double a = 2 * std::numbers::pi * static_cast<double>(x) / static_cast<double>(scene.period);
    return {cap_cx() + kStyle.cap_radius * std::cos(a), cap_cy(side) + kStyle.cap_radius * std::sin(a)};
  }
};

void line(std::ostream& os, double x1, double y1, double x2, double y2, const char* color, const char* extra = "") {
  os << "    <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
     << "\" stroke=\"" << color << "\"" << extra << "/>\n";
}

}  // namespace

std::string render_svg(const CylinderScene& scene) {
  const std::int64_t crossings = count_scene_crossings(scene);

  Layout L{scene};
  for (const auto& c : scene.curves) {
    if (!c.is_cap) continue;
    (c.cap.side == CapSide::Top ? L.top_cap : L.bottom_cap) = true;
  }
  L.rect_top = kStyle.margin + (L.top_cap ? 2 * kStyle.cap_radius + kStyle.cap_gap : 0.0);
  L.rect_h = static_cast<double>(std::max<std::int64_t>(scene.height, 1)) * kStyle.ring_gap;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(L.total_w()) << "\" height=\""
     << num(L.total_h()) << "\" font-family=\"" << kStyle.font << "\" font-size=\"" << kStyle.font_size << "\">\n";
  os << "  <title>K" << scene.m << " x " << (scene.family == Family::Cycle ? "C" : "P") << scene.n
     << ", crossings " << crossings << "</title>\n";
  os << "  <defs>\n    <clipPath id=\"lateral\">\n      <rect x=\"" << num(L.sx(0)) << "\" y=\""
     << num(L.rect_top - kStyle.vertex_radius) << "\" width=\"" << num(kStyle.width) << "\" height=\""
     << num(L.rect_h + 2 * kStyle.vertex_radius) << "\"/>\n    </clipPath>\n  </defs>\n";

  // frame; the left and right sides are glued
  os << "  <g stroke-width=\"" << num(kStyle.stroke) << "\" fill=\"none\">\n";
  os << "    <rect x=\"" << num(L.sx(0)) << "\" y=\"" << num(L.rect_top) << "\" width=\"" << num(kStyle.width)
     << "\" height=\"" << num(L.rect_h) << "\" stroke=\"" << kStyle.frame_color << "\" stroke-dasharray=\"4 3\"/>\n";
  for (double x : {L.sx(0), L.sx(static_cast<double>(scene.period))}) {
    os << "    <text x=\"" << num(x) << "\" y=\"" << num(L.rect_top - 6) << "\" fill=\"" << kStyle.frame_color
       << "\" text-anchor=\"middle\" stroke=\"none\">&gt;&gt;</text>\n";
  }
  for (CapSide side : {CapSide::Top, CapSide::Bottom}) {
    if ((side == CapSide::Top && L.top_cap) || (side == CapSide::Bottom && L.bottom_cap)) {
      os << "    <circle cx=\"" << num(L.cap_cx()) << "\" cy=\"" << num(L.cap_cy(side)) << "\" r=\""
         << num(kStyle.cap_radius) << "\" stroke=\"" << kStyle.frame_color << "\"/>\n";
    }
  }
  os << "  </g>\n";

  os << "  <g stroke-width=\"" << num(kStyle.stroke) << "\" clip-path=\"url(#lateral)\">\n";
  for (const auto& c : scene.curves) {
    if (c.is_cap) {
      const double x = L.sx(static_cast<double>(((c.cap.chord_to % scene.period) + scene.period) % scene.period));
      line(os, x, L.sy(static_cast<double>(c.cap.drop_y0)), x, L.sy(static_cast<double>(c.cap.drop_y1)),
           kStyle.cap_color);
      continue;
    }
    const auto& l = c.lateral;
    const std::int64_t lo = std::min(l.from.x, l.to.x), hi = std::max(l.from.x, l.to.x);
    // every translate that meets [0, period]
    std::int64_t k0 = -((hi + scene.period - 1) / scene.period) - 1, k1 = (scene.period - lo) / scene.period + 1;
    for (std::int64_t k = k0; k <= k1; ++k) {
      const auto a = l.from.x + k * scene.period, b = l.to.x + k * scene.period;
      if (std::max(a, b) < 0 || std::min(a, b) > scene.period) continue;
      if (std::max(a, b) == 0 && std::min(a, b) == 0) continue;
      if (std::min(a, b) == scene.period && std::max(a, b) == scene.period) continue;
      line(os, L.sx(static_cast<double>(a)), L.sy(static_cast<double>(l.from.y)), L.sx(static_cast<double>(b)),
           L.sy(static_cast<double>(l.to.y)), kStyle.edge_color);
    }
  }
  os << "  </g>\n";

  os << "  <g stroke-width=\"" << num(kStyle.stroke) << "\">\n";
  for (const auto& c : scene.curves) {
    if (!c.is_cap) continue;
    const auto [x1, y1] = L.rim(c.cap.side, c.cap.chord_from);
    const auto [x2, y2] = L.rim(c.cap.side, c.cap.chord_to);
    line(os, x1, y1, x2, y2, kStyle.cap_color);
  }
  os << "  </g>\n";

  os << "  <g fill=\"" << kStyle.vertex_color << "\">\n";
  for (const auto& [v, p] : scene.vertices) {
    const std::int64_t x = ((p.x % scene.period) + scene.period) % scene.period;
    os << "    <circle cx=\"" << num(L.sx(static_cast<double>(x))) << "\" cy=\"" << num(L.sy(static_cast<double>(p.y)))
       << "\" r=\"" << num(kStyle.vertex_radius) << "\"><title>(" << v.copy << "," << v.column
       << ")</title></circle>\n";
  }
  os << "  </g>\n";

  os << "  <text x=\"" << num(kStyle.margin) << "\" y=\"" << num(L.total_h() - kStyle.font_size) << "\">K" << scene.m
     << " x " << (scene.family == Family::Cycle ? "C" : "P") << scene.n << "  " << scene.construction
     << "  crossings = " << crossings << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

void emit_svg(const CylinderScene& scene, const std::filesystem::path& path) {
  const std::string doc = render_svg(scene);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << doc;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace crossforge
