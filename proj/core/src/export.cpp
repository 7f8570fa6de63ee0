#include "cubiclam/export.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace cubiclam {

namespace {

using nlohmann::json;

json integer(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() &&
      v >= std::numeric_limits<std::int64_t>::min()) {
    return static_cast<std::int64_t>(v);
  }
  // Beyond 64 bits the integer is kept exact as a decimal string.
  return v.str();
}

json angle_json(const Angle& a) {
  return {{"num", integer(a.numerator())}, {"den", integer(a.denominator())}};
}

json arc_json(const Arc& a) { return {{"start", angle_json(a.start())}, {"end", angle_json(a.end())}}; }

json chord_json(const Chord& c) { return json::array({angle_json(c.a()), angle_json(c.b())}); }

std::ostringstream number_stream() {
  std::ostringstream os;
  os << std::setprecision(17);
  return os;
}

struct SvgCanvas {
  unsigned size;
  double radius() const { return 0.42 * size; }
  double cx() const { return 0.5 * size; }

  std::pair<double, double> point(const Angle& a, double scale = 1.0) const {
    const double phi = 2.0 * std::numbers::pi * a.to_double();
    return {cx() + scale * radius() * std::cos(phi), cx() - scale * radius() * std::sin(phi)};
  }

  void header(std::ostringstream& os) const {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
       << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<circle class=\"circle\" cx=\"" << cx() << "\" cy=\"" << cx() << "\" r=\"" << radius()
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }

  void chord(std::ostringstream& os, const Angle& a, const Angle& b, const char* cls,
             const char* stroke, double width) const {
    const auto [x1, y1] = point(a);
    const auto [x2, y2] = point(b);
    os << "<line class=\"" << cls << "\" data-a=\"" << a << "\" data-b=\"" << b << "\" x1=\""
       << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\""
       << stroke << "\" stroke-width=\"" << width << "\"/>\n";
  }
};

}  // namespace

std::string gap_to_json(const GapApprox& gap) {
  json j;
  j["kind"] = gap.spec.kind == GapKind::RegularCritical ? "regular-critical" : "periodic";
  j["tag"] = angle_json(gap.spec.tag);
  if (gap.spec.parameter_hole) j["parameter_hole"] = arc_json(*gap.spec.parameter_hole);
  j["major"] = chord_json(gap.spec.major);
  j["major_hole"] = arc_json(gap.spec.major_hole);
  j["major_hole_length"] = angle_json(gap.spec.major_hole.length());
  j["validated"] = gap.spec.validated;
  j["depth"] = gap.depth;
  json verts = json::array();
  for (const Angle& v : gap.vertices) verts.push_back(angle_json(v));
  j["vertices"] = std::move(verts);
  json edges = json::array();
  for (const Chord& e : gap.edges) edges.push_back(chord_json(e));
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

std::string pqpg_to_json(const std::vector<PQPGHole>& holes, unsigned max_period) {
  json j;
  j["max_period"] = max_period;
  json arr = json::array();
  for (const PQPGHole& h : holes) {
    arr.push_back({{"hole", arc_json(h.hole)},
                   {"period", h.period},
                   {"dual_major", chord_json(h.dual_major)},
                   {"dual_major_hole", arc_json(h.dual_major_hole)}});
  }
  j["holes"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string gap_to_svg(const GapApprox& gap, unsigned size) {
  const SvgCanvas canvas{size};
  auto os = number_stream();
  os << std::setprecision(8);
  canvas.header(os);
  for (const Chord& e : gap.edges) {
    if (e == gap.spec.major) continue;
    canvas.chord(os, e.a(), e.b(), "hole", "steelblue", 1.0);
  }
  canvas.chord(os, gap.spec.major.a(), gap.spec.major.b(), "major", "crimson", 2.5);
  for (const Angle& v : gap.vertices) {
    const auto [x, y] = canvas.point(v);
    os << "<circle class=\"vertex\" cx=\"" << x << "\" cy=\"" << y
       << "\" r=\"1.5\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string pqpg_to_svg(const std::vector<PQPGHole>& holes, unsigned size) {
  const SvgCanvas canvas{size};
  auto os = number_stream();
  os << std::setprecision(8);
  canvas.header(os);
  for (const PQPGHole& h : holes) {
    canvas.chord(os, h.hole.start(), h.hole.end(), "hole", "steelblue", 1.5);
    canvas.chord(os, h.dual_major.a(), h.dual_major.b(), "major", "crimson", 0.8);
    const Angle mid = h.hole.start() + Angle(BigInt(h.hole.length().numerator()),
                                             BigInt(2 * h.hole.length().denominator()));
    const auto [x, y] = canvas.point(mid, 1.08);
    os << "<text class=\"period\" x=\"" << x << "\" y=\"" << y
       << "\" font-size=\"11\" text-anchor=\"middle\">" << h.period << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string ray_to_csv(const RayPath& ray) {
  auto os = number_stream();
  os << "t,re,im\n";
  for (const RaySample& s : ray.samples) {
    os << s.t << ',' << s.point.real() << ',' << s.point.imag() << '\n';
  }
  return os.str();
}

std::string contraction_to_csv(const ContractionRun& run) {
  auto os = number_stream();
  os << "n,s_n,is_bad_index\n";
  const auto& s = run.trace();
  for (std::size_t n = 0; n < s.size(); ++n) {
    os << n << ',' << s[n] << ',' << (run.is_bad_index(n) ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string patterns_to_json(unsigned period, const std::vector<PatternInfo>& patterns) {
  json j;
  j["period"] = period;
  j["count"] = patterns.size();
  json arr = json::array();
  for (const PatternInfo& p : patterns) {
    arr.push_back({{"pattern", p.pattern}, {"minimal_period", p.minimal_period}});
  }
  j["patterns"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string recurrence_to_json(const CubicMap& f, std::uint32_t horizon,
                               const std::vector<RecurrenceRow>& rows) {
  json j;
  j["lambda"] = {f.lambda().real(), f.lambda().imag()};
  j["b"] = {f.b().real(), f.b().imag()};
  const Complex w = critical_points(f).second;
  j["critical_point"] = {w.real(), w.imag()};
  j["horizon"] = horizon;
  json arr = json::array();
  for (const RecurrenceRow& r : rows) {
    arr.push_back({{"radius", r.radius},
                   {"return_time", r.return_time ? json(*r.return_time) : json(nullptr)}});
  }
  j["rows"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace cubiclam
