#include "cubiclam/render.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <boost/algorithm/string.hpp>

namespace cubiclam {

namespace {

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed " + what + ": '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("malformed " + what + ": '" + s + "'");
  return v;
}

std::array<std::uint8_t, 3> escape_color(std::int32_t n) {
  if (n == kBounded) return {0, 0, 0};
  // Smooth cyclic palette in escape time.
  const double s = std::log1p(static_cast<double>(n)) * 1.7;
  auto channel = [&](double phase) {
    return static_cast<std::uint8_t>(std::lround(127.5 + 127.5 * std::cos(s + phase)));
  };
  return {channel(0.0), channel(2.1), channel(4.2)};
}

}  // namespace

void Window::validate() const {
  for (double v : {x_min, y_min, x_max, y_max}) {
    if (!std::isfinite(v)) throw std::invalid_argument("window bounds must be finite");
  }
  if (!(x_max > x_min) || !(y_max > y_min)) {
    throw std::invalid_argument("window must satisfy x0 < x1 and y0 < y1");
  }
}

Window Window::parse(const std::string& text) {
  std::vector<std::string> parts;
  boost::split(parts, text, boost::is_any_of(","));
  if (parts.size() != 4) throw std::invalid_argument("window must be x0,y0,x1,y1");
  Window w{parse_double(parts[0], "window"), parse_double(parts[1], "window"),
           parse_double(parts[2], "window"), parse_double(parts[3], "window")};
  w.validate();
  return w;
}

void Resolution::validate() const {
  if (width == 0 || height == 0) throw std::invalid_argument("resolution must be positive");
  if (static_cast<std::uint64_t>(width) * height > (std::uint64_t{1} << 28)) {
    throw std::invalid_argument("resolution exceeds 2^28 pixels");
  }
}

Resolution Resolution::parse(const std::string& text) {
  std::vector<std::string> parts;
  boost::split(parts, text, boost::is_any_of("xX"));
  if (parts.size() != 2) throw std::invalid_argument("resolution must be WxH");
  auto dim = [](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        s.size() > 6) {
      throw std::invalid_argument("malformed resolution component '" + s + "'");
    }
    return static_cast<unsigned>(std::stoul(s));
  };
  Resolution r{dim(parts[0]), dim(parts[1])};
  r.validate();
  return r;
}

double PixelGrid::pixel_width() const {
  return (window.x_max - window.x_min) / resolution.width;
}

double PixelGrid::pixel_height() const {
  return (window.y_max - window.y_min) / resolution.height;
}

Complex PixelGrid::center(unsigned i, unsigned j) const {
  return {window.x_min + (i + 0.5) * pixel_width(), window.y_max - (j + 0.5) * pixel_height()};
}

std::pair<double, double> PixelGrid::to_pixel(Complex z) const {
  return {(z.real() - window.x_min) / pixel_width(), (window.y_max - z.imag()) / pixel_height()};
}

std::pair<unsigned, unsigned> PixelGrid::pixel_of(Complex z) const {
  const auto [x, y] = to_pixel(z);
  if (!(x >= 0 && y >= 0 && x < resolution.width && y < resolution.height)) {
    throw std::out_of_range("point lies outside the window");
  }
  return {static_cast<unsigned>(x), static_cast<unsigned>(y)};
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_rows(unsigned rows, unsigned workers, const std::function<void(unsigned)>& row) {
  workers = std::min(resolve_workers(workers), std::max(rows, 1u));
  if (workers <= 1) {
    for (unsigned j = 0; j < rows; ++j) row(j);
    return;
  }
  std::atomic<unsigned> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (unsigned j = next++; j < rows && !failed; j = next++) {
        try {
          row(j);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

SliceImage render_slice(Complex lambda, const Window& window, const Resolution& resolution,
                        std::uint32_t max_iter, unsigned workers) {
  window.validate();
  resolution.validate();
  if (max_iter == 0) throw std::invalid_argument("max_iter must be at least 1");
  SliceImage img{lambda, PixelGrid{window, resolution}, max_iter, {}};
  img.pixels.resize(static_cast<std::size_t>(resolution.width) * resolution.height);
  parallel_rows(resolution.height, workers, [&](unsigned j) {
    for (unsigned i = 0; i < resolution.width; ++i) {
      const CubicMap f(lambda, img.grid.center(i, j));
      const auto [w1, w2] = critical_points(f);
      const auto e1 = escape_iterations(f, w1, max_iter);
      const auto e2 = escape_iterations(f, w2, max_iter);
      img.pixels[static_cast<std::size_t>(j) * resolution.width + i] = {
          e1 ? static_cast<std::int32_t>(*e1) : kBounded,
          e2 ? static_cast<std::int32_t>(*e2) : kBounded};
    }
  });
  return img;
}

EscapeGrid render_dynamic_plane(const CubicMap& f, const Window& window,
                                const Resolution& resolution, std::uint32_t max_iter,
                                unsigned workers) {
  window.validate();
  resolution.validate();
  if (max_iter == 0) throw std::invalid_argument("max_iter must be at least 1");
  EscapeGrid grid{f, PixelGrid{window, resolution}, max_iter, {}};
  grid.escape.resize(static_cast<std::size_t>(resolution.width) * resolution.height);
  parallel_rows(resolution.height, workers, [&](unsigned j) {
    for (unsigned i = 0; i < resolution.width; ++i) {
      const auto e = escape_iterations(f, grid.grid.center(i, j), max_iter);
      grid.escape[static_cast<std::size_t>(j) * resolution.width + i] =
          e ? static_cast<std::int32_t>(*e) : kBounded;
    }
  });
  return grid;
}

void RgbImage::set(unsigned i, unsigned j, std::array<std::uint8_t, 3> color) {
  const std::size_t k = 3 * (static_cast<std::size_t>(j) * width + i);
  std::copy(color.begin(), color.end(), rgb.begin() + static_cast<std::ptrdiff_t>(k));
}

std::array<std::uint8_t, 3> RgbImage::get(unsigned i, unsigned j) const {
  const std::size_t k = 3 * (static_cast<std::size_t>(j) * width + i);
  return {rgb[k], rgb[k + 1], rgb[k + 2]};
}

RgbImage colorize(const SliceImage& image) {
  const auto& res = image.grid.resolution;
  RgbImage out(res.width, res.height);
  for (unsigned j = 0; j < res.height; ++j) {
    for (unsigned i = 0; i < res.width; ++i) {
      const PixelEscape& p = image.at(i, j);
      std::int32_t n = kBounded;
      if (!p.in_connectedness_locus()) {
        // The faster escaping critical point sets the color.
        n = p.first == kBounded ? p.second
            : p.second == kBounded ? p.first
                                   : std::min(p.first, p.second);
      }
      out.set(i, j, escape_color(n));
    }
  }
  return out;
}

RgbImage colorize(const EscapeGrid& grid) {
  const auto& res = grid.grid.resolution;
  RgbImage out(res.width, res.height);
  for (unsigned j = 0; j < res.height; ++j) {
    for (unsigned i = 0; i < res.width; ++i) out.set(i, j, escape_color(grid.at(i, j)));
  }
  return out;
}

void overlay_ray(RgbImage& image, const PixelGrid& grid, const RayPath& ray,
                 std::array<std::uint8_t, 3> color) {
  auto plot = [&](long i, long j) {
    if (i >= 0 && j >= 0 && i < static_cast<long>(image.width) &&
        j < static_cast<long>(image.height)) {
      image.set(static_cast<unsigned>(i), static_cast<unsigned>(j), color);
    }
  };
  for (std::size_t k = 0; k + 1 < ray.samples.size(); ++k) {
    const auto [x0, y0] = grid.to_pixel(ray.samples[k].point);
    const auto [x1, y1] = grid.to_pixel(ray.samples[k + 1].point);
    const double len = std::max(std::abs(x1 - x0), std::abs(y1 - y0));
    if (!std::isfinite(len) || len > 1e5) continue;
    const auto n = static_cast<long>(std::ceil(len)) + 1;
    for (long s = 0; s <= n; ++s) {
      const double u = static_cast<double>(s) / static_cast<double>(n);
      plot(static_cast<long>(std::floor(x0 + u * (x1 - x0))),
           static_cast<long>(std::floor(y0 + u * (y1 - y0))));
    }
  }
}

std::string encode_ppm(const RgbImage& image) {
  std::ostringstream os;
  os << "P6\n" << image.width << ' ' << image.height << "\n255\n";
  os.write(reinterpret_cast<const char*>(image.rgb.data()),
           static_cast<std::streamsize>(image.rgb.size()));
  return os.str();
}

void write_ppm(const std::filesystem::path& path, const RgbImage& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const std::string data = encode_ppm(image);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace cubiclam
