#pragma once

// Command-line front end.  Every subcommand is a pure function of RunConfig;
// run_cli only parses, dispatches, and writes files.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubiclam/cubic_map.hpp"
#include "cubiclam/render.hpp"

namespace cubiclam::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumeric = 2 };

struct RunConfig {
  std::string subcommand;

  // Shared numeric settings.
  std::string lambda = "1/3turn";
  std::string b = "0";
  std::string window;  // empty selects a default for the subcommand
  std::string resolution = "800x800";
  std::uint32_t max_iter = 200;
  unsigned max_period = 1;
  unsigned depth = 4;
  unsigned workers = 0;
  std::string output;

  // gap
  bool pqpg = false;
  std::string tag;
  std::string hole;
  std::string svg;
  std::string json;

  // slice / julia overlays
  bool rays = false;
  std::vector<std::string> ray_angles;

  // ray
  std::string kind = "dynamic";
  std::string angle;
  double t_hi = 4.0;
  double t_lo = 1e-6;
  unsigned steps = 100;
  double ratio = 0.9;
  double tolerance = 1e-10;

  // threads
  unsigned period = 1;

  // sn
  double q = 0.4;
  double bad_step = 2.0;
  double s0 = 10.0;
  std::string gaps = "linear";
  std::uint64_t n = 10000;
  double epsilon = 0.01;

  // recur
  std::uint32_t horizon = 1000;
  std::vector<double> radii{1e-1, 1e-2, 1e-3, 1e-4, 1e-6};
  bool superattracting = false;
};

// "p/qturn" for exp(2 pi i p/q), "re,im", or a real number.
Complex parse_complex(const std::string& text, bool allow_turn);

struct TextArtifact {
  std::string path;  // empty: standard output
  std::string body;
};

struct CommandResult {
  std::vector<TextArtifact> texts;
  std::optional<RgbImage> image;
  std::string image_path;
  int exit_code = kOk;
  std::string diagnostic;  // written to standard error
};

CommandResult cmd_gap(const RunConfig& cfg);
CommandResult cmd_slice(const RunConfig& cfg);
CommandResult cmd_julia(const RunConfig& cfg);
CommandResult cmd_ray(const RunConfig& cfg);
CommandResult cmd_threads(const RunConfig& cfg);
CommandResult cmd_sn(const RunConfig& cfg);
CommandResult cmd_recur(const RunConfig& cfg);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubiclam::cli
