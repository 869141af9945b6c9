#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "mckay/error.hpp"
#include "mckay/junior_fan.hpp"

namespace mckay {

namespace {

constexpr double kWidth = 1000.0;
constexpr double kHeight = 866.0;
constexpr double kMargin = 40.0;

std::string kind_of(const LatticePoint& p) {
  if (p.is_corner())
    return "corner";
  return p.has_zero_coord() ? "phi2" : "phi1";
}

struct Plotter {
  double scale, ox, oy;

  Plotter() {
    const double h = std::sqrt(3.0) / 2.0;
    scale = std::min(kWidth - 2 * kMargin, (kHeight - 2 * kMargin) / h);
    ox = (kWidth - scale) / 2.0;
    oy = kHeight - (kHeight - scale * h) / 2.0;   // baseline, y grows downward
  }

  // e1 -> (0,0), e2 -> (1,0), e3 -> (1/2, sqrt(3)/2)
  std::pair<double, double> at(double x1, double x2, double x3) const {
    (void)x1;
    double u = x2 + x3 / 2.0;
    double v = x3 * std::sqrt(3.0) / 2.0;
    return {ox + scale * u, oy - scale * v};
  }
  std::pair<double, double> at(const LatticePoint& p) const {
    double d = static_cast<double>(p.denominator);
    return at(p.scaled[0] / d, p.scaled[1] / d, p.scaled[2] / d);
  }
};

std::string fmt(const char* f, double a, double b) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string export_json(const Triangulation& t) {
  nlohmann::ordered_json j;
  j["denominator"] = t.denominator;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : t.vertices) {
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (auto a : v.scaled)
      coords.push_back(std::to_string(a) + "/" + std::to_string(t.denominator));
    j["vertices"].push_back({{"coords", coords}, {"kind", kind_of(v)}});
  }
  j["triangles"] = nlohmann::ordered_json::array();
  for (const auto& tr : t.triangles)
    j["triangles"].push_back({tr[0], tr[1], tr[2]});
  return j.dump(2) + "\n";
}

std::string export_svg(const Triangulation& t, const SymmetryAction& w) {
  Plotter pl;
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"866\" "
       "viewBox=\"0 0 1000 866\">\n";
  s += "<rect width=\"1000\" height=\"866\" fill=\"white\"/>\n";

  s += "<g stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"8 6\">\n";
  for (const auto& p : w.perms) {
    if (p.order() != 2)
      continue;
    int fixed = p(0) == 0 ? 0 : p(1) == 1 ? 1 : 2;
    double corner[3] = {0, 0, 0}, mid[3] = {0.5, 0.5, 0.5};
    corner[fixed] = 1;
    mid[fixed] = 0;
    auto [x1, y1] = pl.at(corner[0], corner[1], corner[2]);
    auto [x2, y2] = pl.at(mid[0], mid[1], mid[2]);
    s += "<line x1=\"" + fmt("%.3f\" y1=\"%.3f", x1, y1) + "\" x2=\"" +
         fmt("%.3f\" y2=\"%.3f", x2, y2) + "\"/>\n";
  }
  s += "</g>\n";

  s += "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" stroke-linejoin=\"round\">\n";
  for (const auto& tr : t.triangles) {
    s += "<polygon points=\"";
    for (int k = 0; k < 3; ++k) {
      auto [x, y] = pl.at(t.vertices[tr[k]]);
      s += (k ? " " : "") + fmt("%.3f,%.3f", x, y);
    }
    s += "\"/>\n";
  }
  s += "</g>\n";

  s += "<g>\n";
  for (const auto& v : t.vertices) {
    auto [x, y] = pl.at(v);
    std::string kind = kind_of(v);
    if (kind == "corner")
      s += "<rect x=\"" + fmt("%.3f\" y=\"%.3f", x - 6, y - 6) +
           "\" width=\"12\" height=\"12\" fill=\"black\" class=\"corner\"/>\n";
    else if (kind == "phi1")
      s += "<circle cx=\"" + fmt("%.3f\" cy=\"%.3f", x, y) +
           "\" r=\"5\" fill=\"#c0392b\" class=\"phi1\"/>\n";
    else
      s += "<circle cx=\"" + fmt("%.3f\" cy=\"%.3f", x, y) +
           "\" r=\"5\" fill=\"white\" stroke=\"#1f4e9c\" stroke-width=\"2\" class=\"phi2\"/>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

} // namespace

GeometryFormat parse_geometry_format(std::string_view name) {
  if (name == "json")
    return GeometryFormat::Json;
  if (name == "svg")
    return GeometryFormat::Svg;
  fail(Errc::UnsupportedFormat,
       "unsupported format \"" + std::string(name) + "\" (expected json or svg)");
}

std::string export_geometry(const Triangulation& t, GeometryFormat format,
                            const SymmetryAction& w) {
  switch (format) {
    case GeometryFormat::Json: return export_json(t);
    case GeometryFormat::Svg: return export_svg(t, w);
  }
  fail(Errc::UnsupportedFormat, "unsupported format");
}

Triangulation import_geometry_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Parse, std::string("geometry JSON: ") + e.what());
  }
  try {
    Triangulation t;
    t.denominator = j.at("denominator").get<std::int64_t>();
    if (t.denominator < 1)
      fail(Errc::Parse, "geometry JSON: denominator must be positive");
    for (const auto& v : j.at("vertices")) {
      const auto& coords = v.at("coords");
      if (coords.size() != 3)
        fail(Errc::Parse, "geometry JSON: a vertex needs three coordinates");
      LatticePoint p;
      p.denominator = t.denominator;
      for (int i = 0; i < 3; ++i) {
        Rat q = Rat::parse(coords[i].get<std::string>());
        if (t.denominator % q.den() != 0)
          fail(Errc::Parse, "geometry JSON: coordinate " + q.str() +
                                " does not fit the denominator");
        p.scaled[i] = q.num() * (t.denominator / q.den());
      }
      if (v.contains("kind") && v.at("kind").get<std::string>() != kind_of(p))
        fail(Errc::Parse, "geometry JSON: vertex " + p.str() + " has the wrong kind");
      t.vertices.push_back(p);
    }
    for (const auto& tr : j.at("triangles")) {
      if (tr.size() != 3)
        fail(Errc::Parse, "geometry JSON: a triangle needs three indices");
      std::array<std::size_t, 3> idx;
      for (int k = 0; k < 3; ++k) {
        idx[k] = tr[k].get<std::size_t>();
        if (idx[k] >= t.vertices.size())
          fail(Errc::Parse, "geometry JSON: triangle index out of range");
      }
      t.triangles.push_back(idx);
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Parse, std::string("geometry JSON: ") + e.what());
  }
}

} // namespace mckay
