#include "rectfp/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace rectfp {

std::string format_number(double v, int decimals) {
  if (std::abs(v) < 0.5 * std::pow(10.0, -decimals)) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

std::string emit_svg(const Floorplan& fp, const SvgOptions& options) {
  const double k = options.scale;
  const double m = options.margin;
  const Rect& env = fp.envelope();
  auto px = [&](double v) { return format_number(v * k); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" data-scale=\"" << format_number(k) << "\" viewBox=\""
      << format_number(-m) << ' ' << format_number(-m) << ' ' << format_number(env.w * k + 2 * m) << ' '
      << format_number(env.h * k + 2 * m) << "\" width=\"" << format_number(env.w * k + 2 * m) << "\" height=\""
      << format_number(env.h * k + 2 * m) << "\">\n";
  out << "  <rect class=\"envelope\" x=\"" << px(env.x) << "\" y=\"" << px(env.y) << "\" width=\"" << px(env.w)
      << "\" height=\"" << px(env.h) << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"3\"/>\n";
  for (const auto& [id, r] : fp.rooms()) {
    out << "  <rect class=\"room\" data-room=\"" << id.value << "\" x=\"" << px(r.x) << "\" y=\"" << px(r.y)
        << "\" width=\"" << px(r.w) << "\" height=\"" << px(r.h)
        << "\" fill=\"#f4f1ea\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
  }
  if (options.labels) {
    for (const auto& [id, r] : fp.rooms()) {
      out << "  <text x=\"" << px(r.x + r.w / 2) << "\" y=\"" << px(r.y + r.h / 2)
          << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
          << id.value << " (" << format_number(r.w, 2) << "×" << format_number(r.h, 2) << ")</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rectfp
