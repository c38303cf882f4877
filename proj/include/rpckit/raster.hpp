#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "rpckit/errors.hpp"

namespace rpckit {

using Mask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

enum class RasterUnits { Rgb, Meters };

/// H x W image or height map. Channels are stored as separate dense planes
/// (rows = image lines, cols = samples). The optional mask marks valid
/// pixels; false = NO-DATA.
struct Raster {
  std::vector<Eigen::ArrayXXd> planes;
  std::optional<Mask> mask;
  RasterUnits units = RasterUnits::Rgb;

  Raster() = default;
  Raster(int rows, int cols, int channels, RasterUnits u = RasterUnits::Rgb)
      : units(u) {
    planes.assign(channels, Eigen::ArrayXXd::Zero(rows, cols));
  }

  static Raster rgb(int rows, int cols) { return Raster(rows, cols, 3); }
  static Raster meters(int rows, int cols) {
    return Raster(rows, cols, 1, RasterUnits::Meters);
  }

  int rows() const { return planes.empty() ? 0 : int(planes[0].rows()); }
  int cols() const { return planes.empty() ? 0 : int(planes[0].cols()); }
  int channels() const { return int(planes.size()); }

  bool same_dims(const Raster& other) const {
    return rows() == other.rows() && cols() == other.cols() &&
           channels() == other.channels();
  }

  bool valid_at(Eigen::Index r, Eigen::Index c) const {
    return !mask || (*mask)(r, c);
  }

  /// Mask with every pixel valid (used when combining optional masks).
  Mask effective_mask() const {
    if (mask) return *mask;
    return Mask::Constant(rows(), cols(), true);
  }

  void require_same_dims(const Raster& other, const std::string& what) const {
    if (!same_dims(other))
      throw DimMismatch(what + ": " + std::to_string(rows()) + "x" +
                        std::to_string(cols()) + "x" + std::to_string(channels()) +
                        " vs " + std::to_string(other.rows()) + "x" +
                        std::to_string(other.cols()) + "x" +
                        std::to_string(other.channels()));
  }
};

/// Intersection of the optional masks of two rasters.
inline Mask combined_mask(const Raster& a, const Raster& b) {
  if (a.mask && b.mask) return *a.mask && *b.mask;
  if (a.mask) return *a.mask;
  if (b.mask) return *b.mask;
  return Mask::Constant(a.rows(), a.cols(), true);
}

}  // namespace rpckit
