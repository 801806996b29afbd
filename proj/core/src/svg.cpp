#include "dimer/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "dimer/divisors.hpp"

namespace dimer {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

std::string label_string(const TorusDivisor& d) {
  const auto s = d.support();
  const bool compact = std::all_of(s.begin(), s.end(), [](int r) { return r + 1 < 10; });
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) out += (k && !compact ? "," : "") + std::to_string(s[k] + 1);
  return out;
}

}  // namespace

std::string triangulation_svg(const Fan& fan) {
  constexpr double kUnit = 80, kMargin = 40;
  long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& lp : fan.polygon.points) {
    if (first) {
      xmin = xmax = lp.p.x;
      ymin = ymax = lp.p.y;
      first = false;
    }
    xmin = std::min(xmin, lp.p.x);
    xmax = std::max(xmax, lp.p.x);
    ymin = std::min(ymin, lp.p.y);
    ymax = std::max(ymax, lp.p.y);
  }
  const double w = (xmax - xmin) * kUnit + 2 * kMargin;
  const double h = (ymax - ymin) * kUnit + 2 * kMargin;
  auto X = [&](long x) { return num((x - xmin) * kUnit + kMargin); };
  auto Y = [&](long y) { return num((ymax - y) * kUnit + kMargin); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h) << "\">\n";
  os << "<polygon fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < fan.polygon.hull.size(); ++k)
    os << (k ? " " : "") << X(fan.polygon.hull[k].x) << "," << Y(fan.polygon.hull[k].y);
  os << "\"/>\n";
  for (const auto& e : fan.edges) {
    const auto p = fan.rays[e[0]].xy(), q = fan.rays[e[1]].xy();
    os << "<line x1=\"" << X(p.x) << "\" y1=\"" << Y(p.y) << "\" x2=\"" << X(q.x) << "\" y2=\"" << Y(q.y)
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (int r = 0; r < fan.num_rays(); ++r) {
    const auto p = fan.rays[r].xy();
    os << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"5\" fill=\""
       << (fan.is_compact_ray(r) ? "white" : "black") << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << X(p.x) << "\" y=\"" << Y(p.y) << "\" dx=\"8\" dy=\"-8\" font-size=\"14\">v" << r + 1
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string quiver_svg(const DimerModel& model, const Fan& fan) {
  if (!model.positions) throw Error(ErrorKind::Input, "quiver view needs vertex positions");
  const auto& pos = *model.positions;
  const std::array<double, 2> period = model.period.value_or(std::array<double, 2>{1, 1});
  constexpr double kScale = 40, kMargin = 40;
  const double w = period[0] * kScale + 2 * kMargin;
  const double h = period[1] * kScale + 2 * kMargin;
  auto X = [&](double x) { return num(x * kScale + kMargin); };
  auto Y = [&](double y) { return num((period[1] - y) * kScale + kMargin); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h) << "\">\n";
  os << "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
        "orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n";
  os << "<rect x=\"" << X(0) << "\" y=\"" << Y(period[1]) << "\" width=\"" << num(period[0] * kScale) << "\" height=\""
     << num(period[1] * kScale) << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4\"/>\n";
  const auto labels = arrow_labels(model, fan);
  for (const auto& a : model.arrows) {
    const auto& p = pos.at(a.tail);
    const auto& q0 = pos.at(a.head);
    const double qx = q0[0] + a.wind[0] * period[0], qy = q0[1] + a.wind[1] * period[1];
    // Shorten so the marker stops at the vertex disc.
    const double dx = qx - p[0], dy = qy - p[1], len = std::hypot(dx, dy);
    const double t = len > 0 ? 0.35 / len : 0;
    os << "<line x1=\"" << X(p[0] + dx * t) << "\" y1=\"" << Y(p[1] + dy * t) << "\" x2=\"" << X(qx - dx * t)
       << "\" y2=\"" << Y(qy - dy * t) << "\" stroke=\"black\" marker-end=\"url(#head)\"/>\n";
    os << "<text x=\"" << X((p[0] + qx) / 2) << "\" y=\"" << Y((p[1] + qy) / 2)
       << "\" font-size=\"11\" fill=\"#b00000\" text-anchor=\"middle\">" << label_string(labels[a.id]) << "</text>\n";
  }
  for (int v = 0; v < model.num_vertices; ++v) {
    const auto& p = pos.at(v);
    os << "<circle cx=\"" << X(p[0]) << "\" cy=\"" << Y(p[1]) << "\" r=\"9\" fill=\"white\" stroke=\"black\"/>\n";
    os << "<text x=\"" << X(p[0]) << "\" y=\"" << Y(p[1]) << "\" dy=\"4\" font-size=\"11\" text-anchor=\"middle\">" << v
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace dimer
