#pragma once

/**
 * @file render.hpp
 * @brief Escape-time rendering of parameter slices and dynamical planes.
 *
 * Every pixel is a pure function of its center, so the row-parallel schedule
 * cannot change the output; worker count only changes wall time.
 */

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "cubiclam/cubic_map.hpp"
#include "cubiclam/rays.hpp"

namespace cubiclam {

struct Window {
  double x_min = -2, y_min = -2, x_max = 2, y_max = 2;

  // Throws std::invalid_argument for an empty or non-finite rectangle.
  void validate() const;
  static Window parse(const std::string& text);  // "x0,y0,x1,y1"
};

struct Resolution {
  unsigned width = 0, height = 0;

  void validate() const;
  static Resolution parse(const std::string& text);  // "WxH"
};

// Pixel (i, j) has center x_min + (i + 1/2) dx, y_max - (j + 1/2) dy; row 0 is the top.
struct PixelGrid {
  Window window;
  Resolution resolution;

  Complex center(unsigned i, unsigned j) const;
  // Pixel containing z; throws std::out_of_range outside the window.
  std::pair<unsigned, unsigned> pixel_of(Complex z) const;
  // Continuous pixel coordinates of z (may lie outside the grid).
  std::pair<double, double> to_pixel(Complex z) const;
  double pixel_width() const;
  double pixel_height() const;
};

inline constexpr std::int32_t kBounded = -1;

struct PixelEscape {
  std::int32_t first = kBounded;   // escape time of the first critical point
  std::int32_t second = kBounded;  // escape time of the second critical point
  bool in_connectedness_locus() const { return first == kBounded && second == kBounded; }
};

struct SliceImage {
  Complex lambda;
  PixelGrid grid;
  std::uint32_t max_iter = 0;
  std::vector<PixelEscape> pixels;  // row-major

  const PixelEscape& at(unsigned i, unsigned j) const {
    return pixels[static_cast<std::size_t>(j) * grid.resolution.width + i];
  }
};

struct EscapeGrid {
  CubicMap map;
  PixelGrid grid;
  std::uint32_t max_iter = 0;
  std::vector<std::int32_t> escape;  // row-major, kBounded for bounded points

  std::int32_t at(unsigned i, unsigned j) const {
    return escape[static_cast<std::size_t>(j) * grid.resolution.width + i];
  }
};

// 0 selects std::thread::hardware_concurrency().
unsigned resolve_workers(unsigned requested);

// Calls row(j) for every j < rows on up to `workers` threads.
void parallel_rows(unsigned rows, unsigned workers, const std::function<void(unsigned)>& row);

SliceImage render_slice(Complex lambda, const Window& window, const Resolution& resolution,
                        std::uint32_t max_iter, unsigned workers = 0);

EscapeGrid render_dynamic_plane(const CubicMap& f, const Window& window,
                                const Resolution& resolution, std::uint32_t max_iter,
                                unsigned workers = 0);

struct RgbImage {
  unsigned width = 0, height = 0;
  std::vector<std::uint8_t> rgb;

  RgbImage(unsigned w, unsigned h) : width(w), height(h), rgb(std::size_t{3} * w * h, 0) {}
  void set(unsigned i, unsigned j, std::array<std::uint8_t, 3> color);
  std::array<std::uint8_t, 3> get(unsigned i, unsigned j) const;
};

// Bounded pixels black, escaping pixels colored by escape time.
RgbImage colorize(const SliceImage& image);
RgbImage colorize(const EscapeGrid& grid);

void overlay_ray(RgbImage& image, const PixelGrid& grid, const RayPath& ray,
                 std::array<std::uint8_t, 3> color);

std::string encode_ppm(const RgbImage& image);
// Throws std::runtime_error naming the path on I/O failure.
void write_ppm(const std::filesystem::path& path, const RgbImage& image);

}  // namespace cubiclam
