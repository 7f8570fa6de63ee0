#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <boost/algorithm/string.hpp>

#include "CLI11.hpp"
#include "cubiclam/contraction.hpp"
#include "cubiclam/export.hpp"
#include "cubiclam/quad_gap.hpp"
#include "cubiclam/rays.hpp"
#include "cubiclam/thread.hpp"

namespace cubiclam::cli {

namespace {

constexpr unsigned kMaxGapDepth = 10;
constexpr unsigned kMaxCliPeriod = 12;

double parse_real(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed " + what + " '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("malformed " + what + " '" + s + "'");
  }
  return v;
}

Arc parse_hole(const std::string& text) {
  std::vector<std::string> parts;
  boost::split(parts, text, boost::is_any_of(","));
  if (parts.size() != 2) throw std::invalid_argument("hole must be p/q,p/q, got '" + text + "'");
  return Arc(Angle::parse(parts[0]), Angle::parse(parts[1]));
}

Window window_or(const RunConfig& cfg, const char* fallback) {
  return Window::parse(cfg.window.empty() ? std::string(fallback) : cfg.window);
}

std::string diagnostic_line(const std::string& label, const std::string& text) {
  return label + ": " + text + "\n";
}

}  // namespace

Complex parse_complex(const std::string& raw, bool allow_turn) {
  const std::string text = boost::algorithm::trim_copy(raw);
  if (boost::algorithm::ends_with(text, "turn")) {
    if (!allow_turn) throw std::invalid_argument("'" + text + "' is not accepted here");
    return root_of_unity(Angle::parse(text.substr(0, text.size() - 4)));
  }
  std::vector<std::string> parts;
  boost::split(parts, text, boost::is_any_of(","));
  if (parts.size() == 2) {
    return {parse_real(parts[0], "complex number"), parse_real(parts[1], "complex number")};
  }
  if (parts.size() == 1) {
    if (text.find('/') != std::string::npos) {
      throw std::invalid_argument("malformed complex number '" + text +
                                  "'; use p/qturn for a root of unity or re,im");
    }
    return {parse_real(text, "complex number"), 0.0};
  }
  throw std::invalid_argument("malformed complex number '" + text + "'");
}

CommandResult cmd_gap(const RunConfig& cfg) {
  const int chosen = int(cfg.pqpg) + int(!cfg.tag.empty()) + int(!cfg.hole.empty());
  if (chosen != 1) throw std::invalid_argument("give exactly one of --pqpg, --tag, --hole");
  if (cfg.depth > kMaxGapDepth) {
    throw std::invalid_argument("depth " + std::to_string(cfg.depth) + " exceeds " +
                                std::to_string(kMaxGapDepth));
  }
  CommandResult res;
  std::string json;
  std::string svg;
  if (cfg.pqpg) {
    if (cfg.max_period < 1 || cfg.max_period > kMaxCliPeriod) {
      throw std::invalid_argument("max-period must lie in [1, " + std::to_string(kMaxCliPeriod) +
                                  "]");
    }
    const auto holes = pqpg_holes(cfg.max_period);
    json = pqpg_to_json(holes, cfg.max_period);
    svg = pqpg_to_svg(holes);
  } else {
    GapSpec spec = [&] {
      if (!cfg.tag.empty()) {
        const Angle theta = Angle::parse(cfg.tag);
        GapSpec s = major_from_critical_tag(theta);
        if (!s.validated) {
          throw std::invalid_argument("tag " + theta.to_string() +
                                      " is not admissible: the orbit of 3*tag meets the closed "
                                      "major hole");
        }
        return s;
      }
      return major_from_hole(parse_hole(cfg.hole));
    }();
    const GapApprox gap = grow_gap(spec, cfg.depth);
    json = gap_to_json(gap);
    svg = gap_to_svg(gap);
  }
  if (!cfg.svg.empty()) res.texts.push_back({cfg.svg, svg});
  if (!cfg.json.empty() || cfg.svg.empty()) res.texts.push_back({cfg.json, json});
  return res;
}

CommandResult cmd_slice(const RunConfig& cfg) {
  const Complex lambda = parse_complex(cfg.lambda, true);
  const Window window = window_or(cfg, "-4,-4,4,4");
  const Resolution resolution = Resolution::parse(cfg.resolution);
  if (cfg.max_iter == 0) throw std::invalid_argument("max-iter must be positive");

  CommandResult res;
  RgbImage img = colorize(render_slice(lambda, window, resolution, cfg.max_iter, cfg.workers));
  const PixelGrid grid{window, resolution};
  std::vector<Angle> angles;
  if (cfg.rays) {
    for (const PQPGHole& h : pqpg_holes(cfg.max_period)) {
      angles.push_back(h.hole.start());
      angles.push_back(h.hole.end());
    }
  }
  for (const std::string& a : cfg.ray_angles) angles.push_back(Angle::parse(a));
  RayOptions opt;
  opt.ratio = cfg.ratio;
  opt.tolerance = cfg.tolerance;
  for (const Angle& a : angles) {
    try {
      overlay_ray(img, grid, trace_parameter_ray(lambda, a, cfg.t_hi, cfg.t_lo, cfg.steps, opt),
                  {255, 255, 255});
    } catch (const RayTraceError& e) {
      overlay_ray(img, grid, e.partial(), {255, 255, 255});
      res.exit_code = kNumeric;
      res.diagnostic += diagnostic_line("parameter ray " + a.to_string(), e.what());
    }
  }
  res.image = std::move(img);
  res.image_path = cfg.output.empty() ? "slice.ppm" : cfg.output;
  return res;
}

CommandResult cmd_julia(const RunConfig& cfg) {
  const CubicMap f(parse_complex(cfg.lambda, true), parse_complex(cfg.b, false));
  const Window window = window_or(cfg, "-2,-2,2,2");
  const Resolution resolution = Resolution::parse(cfg.resolution);
  if (cfg.max_iter == 0) throw std::invalid_argument("max-iter must be positive");

  CommandResult res;
  RgbImage img = colorize(render_dynamic_plane(f, window, resolution, cfg.max_iter, cfg.workers));
  const PixelGrid grid{window, resolution};
  RayOptions opt;
  opt.ratio = cfg.ratio;
  opt.tolerance = cfg.tolerance;
  for (const std::string& text : cfg.ray_angles) {
    const Angle a = Angle::parse(text);
    try {
      overlay_ray(img, grid, trace_dynamic_ray(f, a, cfg.t_hi, cfg.t_lo, cfg.steps, opt),
                  {255, 255, 255});
    } catch (const RayTraceError& e) {
      overlay_ray(img, grid, e.partial(), {255, 255, 255});
      res.exit_code = kNumeric;
      res.diagnostic += diagnostic_line("dynamic ray " + a.to_string(), e.what());
    }
  }
  res.image = std::move(img);
  res.image_path = cfg.output.empty() ? "julia.ppm" : cfg.output;
  return res;
}

CommandResult cmd_ray(const RunConfig& cfg) {
  if (cfg.angle.empty()) throw std::invalid_argument("--angle is required");
  const Angle theta = Angle::parse(cfg.angle);
  const Complex lambda = parse_complex(cfg.lambda, true);
  if (!(cfg.t_hi > cfg.t_lo && cfg.t_lo > 0)) {
    throw std::invalid_argument("need t-hi > t-lo > 0");
  }
  if (cfg.steps == 0) throw std::invalid_argument("steps must be positive");
  RayOptions opt;
  opt.ratio = cfg.ratio;
  opt.tolerance = cfg.tolerance;

  CommandResult res;
  try {
    RayPath path;
    if (cfg.kind == "dynamic") {
      path = trace_dynamic_ray(CubicMap(lambda, parse_complex(cfg.b, false)), theta, cfg.t_hi,
                               cfg.t_lo, cfg.steps, opt);
    } else if (cfg.kind == "parameter") {
      path = trace_parameter_ray(lambda, theta, cfg.t_hi, cfg.t_lo, cfg.steps, opt);
    } else {
      throw std::invalid_argument("kind must be dynamic or parameter, got '" + cfg.kind + "'");
    }
    res.texts.push_back({cfg.output, ray_to_csv(path)});
  } catch (const RayTraceError& e) {
    const char* label = dynamic_cast<const PrecriticalCollision*>(&e) != nullptr
                            ? "PrecriticalCollision"
                            : "NewtonDivergence";
    res.texts.push_back(
        {cfg.output, ray_to_csv(e.partial()) + "# " + label + ": " + e.what() + "\n"});
    res.exit_code = kNumeric;
    res.diagnostic = diagnostic_line(label, e.what());
  }
  return res;
}

CommandResult cmd_threads(const RunConfig& cfg) {
  CommandResult res;
  res.texts.push_back({cfg.output, patterns_to_json(cfg.period,
                                                    enumerate_periodic_patterns(cfg.period))});
  return res;
}

CommandResult cmd_sn(const RunConfig& cfg) {
  std::vector<std::uint64_t> schedule;
  if (cfg.gaps == "linear") {
    schedule = linear_gap_schedule(cfg.n);
  } else if (boost::algorithm::starts_with(cfg.gaps, "constant:")) {
    const double gap = parse_real(cfg.gaps.substr(9), "constant gap");
    if (!(gap >= 1) || gap != std::floor(gap)) {
      throw std::invalid_argument("constant gap must be a positive integer");
    }
    schedule = constant_gap_schedule(static_cast<std::uint64_t>(gap), cfg.n);
  } else if (cfg.gaps != "none") {
    throw std::invalid_argument("gaps must be linear, constant:K or none, got '" + cfg.gaps + "'");
  }
  const ContractionRun run = simulate_contraction(cfg.q, cfg.bad_step, cfg.s0, schedule, cfg.n);
  const EnvelopeReport env = check_envelope(run, cfg.epsilon);

  CommandResult res;
  res.texts.push_back({cfg.output, contraction_to_csv(run)});
  std::ostringstream os;
  os << std::setprecision(6) << "final s_n = " << run.trace().back()
     << "; gap threshold N = " << env.gap_threshold << "; checked pairs = " << env.checked_pairs
     << "; violations = " << env.violations
     << "; eventually below 4*epsilon = " << (env.eventually_below_4eps() ? "yes" : "no")
     << "\n";
  res.diagnostic = os.str();
  return res;
}

CommandResult cmd_recur(const RunConfig& cfg) {
  const Complex lambda = parse_complex(cfg.lambda, true);
  Complex b = parse_complex(cfg.b, false);
  if (cfg.superattracting) {
    // f(w) = w with f'(w) = 0: w^2 = lambda - 2, b = (3 - 2 lambda) / w.
    const Complex w = std::sqrt(lambda - 2.0);
    b = (3.0 - 2.0 * lambda) / w;
  }
  const CubicMap f(lambda, b);
  CommandResult res;
  try {
    res.texts.push_back(
        {cfg.output, recurrence_to_json(f, cfg.horizon,
                                        recurrence_diagnostic(f, cfg.horizon, cfg.radii))});
  } catch (const std::domain_error& e) {
    res.exit_code = kNumeric;
    res.diagnostic = diagnostic_line("precondition", e.what());
  }
  return res;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact circle dynamics, quadratic gaps, threads, and cubic ray tracing"};
  app.name("cubiclam");
  app.set_config("--config", "", "key=value file supplying option defaults");
  app.add_option("--workers", cfg.workers, "Worker threads for rendering (0 = all cores)")
      ->envname("CUBICLAM_WORKERS");
  app.require_subcommand(1);

  auto add_lambda = [&](CLI::App* sub) {
    sub->add_option("--lambda", cfg.lambda, "Multiplier at 0: p/qturn, re,im, or a real")
        ->capture_default_str();
  };
  auto add_render = [&](CLI::App* sub) {
    sub->add_option("--window", cfg.window, "x0,y0,x1,y1");
    sub->add_option("--res", cfg.resolution, "WxH")->capture_default_str();
    sub->add_option("--max-iter", cfg.max_iter, "Escape iteration budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_ray_tuning = [&](CLI::App* sub) {
    sub->add_option("--t-hi", cfg.t_hi, "Highest potential")->capture_default_str();
    sub->add_option("--t-lo", cfg.t_lo, "Lowest potential")->capture_default_str();
    sub->add_option("--steps", cfg.steps, "Output samples minus one")->capture_default_str();
    sub->add_option("--ratio", cfg.ratio, "Continuation potential ratio")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    sub->add_option("--tol", cfg.tolerance, "Accepted Newton correction")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  CLI::App* gap = app.add_subcommand("gap", "Quadratic gaps and the parameter gap holes");
  gap->add_flag("--pqpg", cfg.pqpg, "All parameter-gap holes up to --max-period");
  gap->add_option("--max-period", cfg.max_period, "Largest hole period")->capture_default_str();
  gap->add_option("--tag", cfg.tag, "Critical tag p/q");
  gap->add_option("--hole", cfg.hole, "Parameter hole p/q,p/q");
  gap->add_option("--depth", cfg.depth, "Growth depth")->capture_default_str();
  gap->add_option("--svg", cfg.svg, "SVG output path");
  gap->add_option("--json", cfg.json, "JSON output path (default: stdout)");

  CLI::App* slice = app.add_subcommand("slice", "Render a parameter slice as PPM");
  add_lambda(slice);
  add_render(slice);
  add_ray_tuning(slice);
  slice->add_flag("--rays", cfg.rays, "Overlay parameter rays of holes up to --max-period");
  slice->add_option("--max-period", cfg.max_period, "Largest hole period for --rays")
      ->capture_default_str();
  slice->add_option("--ray-angle", cfg.ray_angles, "Extra parameter ray angles p/q");
  slice->add_option("-o,--output", cfg.output, "PPM path (default slice.ppm)");

  CLI::App* julia = app.add_subcommand("julia", "Render a dynamical plane as PPM");
  add_lambda(julia);
  julia->add_option("--b", cfg.b, "Parameter b as re,im")->capture_default_str();
  add_render(julia);
  add_ray_tuning(julia);
  julia->add_option("--ray-angle", cfg.ray_angles, "Dynamic ray angles p/q");
  julia->add_option("-o,--output", cfg.output, "PPM path (default julia.ppm)");

  CLI::App* ray = app.add_subcommand("ray", "Trace a dynamic or parameter ray to CSV");
  add_lambda(ray);
  ray->add_option("--b", cfg.b, "Parameter b for dynamic rays")->capture_default_str();
  ray->add_option("--kind", cfg.kind, "dynamic or parameter")->capture_default_str();
  ray->add_option("--angle", cfg.angle, "Exact angle p/q")->required();
  add_ray_tuning(ray);
  ray->add_option("-o,--output", cfg.output, "CSV path (default: stdout)");

  CLI::App* threads = app.add_subcommand("threads", "Enumerate periodic thread patterns");
  threads->add_option("--period", cfg.period, "Pattern period N")
      ->check(CLI::Range(1u, 24u))
      ->capture_default_str();
  threads->add_option("-o,--output", cfg.output, "JSON path (default: stdout)");

  CLI::App* sn = app.add_subcommand("sn", "Simulate the contraction sequence");
  sn->add_option("--q", cfg.q, "Good-step factor")->capture_default_str();
  sn->add_option("--b", cfg.bad_step, "Bad-step additive constant")->capture_default_str();
  sn->add_option("--s0", cfg.s0, "Initial value")->capture_default_str();
  sn->add_option("--gaps", cfg.gaps, "linear, constant:K, or none")->capture_default_str();
  sn->add_option("--n", cfg.n, "Last index")->check(CLI::PositiveNumber)->capture_default_str();
  sn->add_option("--epsilon", cfg.epsilon, "Envelope epsilon")->capture_default_str();
  sn->add_option("-o,--output", cfg.output, "CSV path (default: stdout)");

  CLI::App* recur = app.add_subcommand("recur", "Return times of the second critical point");
  add_lambda(recur);
  recur->add_option("--b", cfg.b, "Parameter b as re,im")->capture_default_str();
  recur->add_flag("--superattracting", cfg.superattracting,
                  "Use the b that makes the second critical point fixed");
  recur->add_option("--horizon", cfg.horizon, "Iteration horizon")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  recur->add_option("--radii", cfg.radii, "Strictly decreasing radii");
  recur->add_option("-o,--output", cfg.output, "JSON path (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  using Handler = CommandResult (*)(const RunConfig&);
  const std::vector<std::pair<CLI::App*, Handler>> table = {
      {gap, cmd_gap},         {slice, cmd_slice}, {julia, cmd_julia}, {ray, cmd_ray},
      {threads, cmd_threads}, {sn, cmd_sn},       {recur, cmd_recur}};

  CommandResult result;
  try {
    for (const auto& [sub, handler] : table) {
      if (sub->parsed()) {
        cfg.subcommand = sub->get_name();
        result = handler(cfg);
      }
    }
    for (const TextArtifact& t : result.texts) {
      if (t.path.empty()) {
        out << t.body;
        continue;
      }
      std::ofstream file(t.path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + t.path + " for writing");
      file << t.body;
      if (!file) throw std::runtime_error("write failed for " + t.path);
    }
    if (result.image) write_ppm(result.image_path, *result.image);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::logic_error& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << result.diagnostic;
  return result.exit_code;
}

}  // namespace cubiclam::cli
