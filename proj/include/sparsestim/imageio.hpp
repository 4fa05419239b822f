#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "sparsestim/perception.hpp"

namespace sparsestim {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// IDX3 image set (MNIST / Fashion-MNIST layout).
struct IdxDataset {
  std::size_t count = 0;
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  ///< count images, each row-major

  std::span<const std::uint8_t> image(std::size_t i) const;
};

/// Big-endian header: magic 0x00000803, count, rows, cols; then exactly
/// count * rows * cols bytes.
IdxDataset parse_idx(std::span<const std::uint8_t> bytes);
IdxDataset load_idx(const std::filesystem::path& path);

/// v / 255 per pixel. Images that do not match the grid are rejected unless
/// `resample` is set, in which case they go through Lanczos-3 resampling.
Percept to_target(std::span<const std::uint8_t> image, std::size_t width, std::size_t height,
                  const PerceptGrid& grid, bool resample = false);

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> pixels;  ///< row-major, [0, 1]
};

/// Binary P5, maxval 255, value * 255 rounded half away from zero.
std::vector<std::uint8_t> encode_pgm(std::span<const double> pixels, std::size_t width,
                                     std::size_t height);
GrayImage decode_pgm(std::span<const std::uint8_t> bytes);

void write_pgm(const std::filesystem::path& path, std::span<const double> pixels,
               std::size_t width, std::size_t height);
GrayImage read_pgm(const std::filesystem::path& path);

}  // namespace sparsestim
