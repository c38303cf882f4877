#pragma once

#include <stdexcept>
#include <string>

namespace rpckit {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- RPC parsing / model errors ----

class MissingKey : public Error {
 public:
  explicit MissingKey(std::string key_)
      : Error("missing key: " + key_), key(std::move(key_)) {}
  std::string key;
};

class MalformedNumber : public Error {
 public:
  MalformedNumber(std::string key_, std::string text_)
      : Error("malformed number for " + key_ + ": '" + text_ + "'"),
        key(std::move(key_)),
        text(std::move(text_)) {}
  std::string key;
  std::string text;
};

class NonPositiveScale : public Error {
 public:
  NonPositiveScale(std::string key_, double value_)
      : Error("scale must be > 0: " + key_ + " = " + std::to_string(value_)),
        key(std::move(key_)),
        value(value_) {}
  std::string key;
  double value;
};

class DenominatorNearZero : public Error {
 public:
  DenominatorNearZero(long index_, double value_)
      : Error("rational polynomial denominator near zero at point " +
              std::to_string(index_) + " (value " + std::to_string(value_) + ")"),
        index(index_),
        value(value_) {}
  long index;
  double value;
};

class NoInverseModel : public Error {
 public:
  NoInverseModel() : Error("camera has no inverse (localization) coefficients") {}
};

class NoConvergence : public Error {
 public:
  NoConvergence(long index_, double residual_px_)
      : Error("iterative localization did not converge at point " +
              std::to_string(index_) + " (residual " +
              std::to_string(residual_px_) + " px)"),
        index(index_),
        residual_px(residual_px_) {}
  long index;
  double residual_px;
};

class SingularJacobian : public Error {
 public:
  explicit SingularJacobian(long index_)
      : Error("singular Jacobian in iterative localization at point " +
              std::to_string(index_)),
        index(index_) {}
  long index;
};

class RankDeficientSystem : public Error {
 public:
  explicit RankDeficientSystem(const std::string& detail)
      : Error("rank-deficient least-squares system: " + detail) {}
};

class ResidualAboveTolerance : public Error {
 public:
  ResidualAboveTolerance(double residual_, double tolerance_)
      : Error("fit residual " + std::to_string(residual_) +
              " exceeds tolerance " + std::to_string(tolerance_)),
        residual(residual_),
        tolerance(tolerance_) {}
  double residual;
  double tolerance;
};

// ---- Sampling / rendering errors ----

class DegenerateRange : public Error {
 public:
  DegenerateRange(double h_near_, double h_far_)
      : Error("degenerate height range: near " + std::to_string(h_near_) +
              " must exceed far " + std::to_string(h_far_)),
        h_near(h_near_),
        h_far(h_far_) {}
  double h_near;
  double h_far;
};

class DimMismatch : public Error {
 public:
  explicit DimMismatch(const std::string& detail)
      : Error("dimension mismatch: " + detail) {}
};

// ---- Loss / metric errors ----

class EmptyMask : public Error {
 public:
  explicit EmptyMask(const std::string& detail)
      : Error("no valid pixels: " + detail) {}
};

class ImageTooSmall : public Error {
 public:
  ImageTooSmall(int rows_, int cols_, int window_)
      : Error("image " + std::to_string(rows_) + "x" + std::to_string(cols_) +
              " smaller than the " + std::to_string(window_) + "-pixel window"),
        rows(rows_),
        cols(cols_),
        window(window_) {}
  int rows;
  int cols;
  int window;
};

class NonPositiveHeight : public Error {
 public:
  NonPositiveHeight(long index_, double value_)
      : Error("non-positive height in log-space loss at point " +
              std::to_string(index_) + " (value " + std::to_string(value_) + ")"),
        index(index_),
        value(value_) {}
  long index;
  double value;
};

class OutOfBoundsPoint : public Error {
 public:
  OutOfBoundsPoint(long index_, long row_, long col_)
      : Error("sparse point " + std::to_string(index_) + " at (" +
              std::to_string(row_) + "," + std::to_string(col_) +
              ") lies outside the raster"),
        index(index_),
        row(row_),
        col(col_) {}
  long index;
  long row;
  long col;
};

class MissingTerm : public Error {
 public:
  explicit MissingTerm(std::string name_)
      : Error("loss term required but absent: " + name_), name(std::move(name_)) {}
  std::string name;
};

// ---- Fitting errors ----

class BadConfig : public Error {
 public:
  explicit BadConfig(const std::string& detail) : Error("bad config: " + detail) {}
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& detail)
      : Error("shape mismatch: " + detail) {}
};

class NonFiniteLoss : public Error {
 public:
  NonFiniteLoss(std::string term_, int iteration_)
      : Error("non-finite loss term '" + term_ + "' at iteration " +
              std::to_string(iteration_)),
        term(std::move(term_)),
        iteration(iteration_) {}
  std::string term;
  int iteration;
};

// ---- Synthetic scene errors ----

class BadDims : public Error {
 public:
  explicit BadDims(const std::string& detail) : Error("bad dims: " + detail) {}
};

class FootprintOutOfTerrain : public Error {
 public:
  explicit FootprintOutOfTerrain(const std::string& detail)
      : Error("camera footprint leaves the terrain: " + detail) {}
};

// ---- File I/O errors ----

class UnsupportedFormat : public Error {
 public:
  explicit UnsupportedFormat(const std::string& detail)
      : Error("unsupported format: " + detail) {}
};

class CorruptFile : public Error {
 public:
  explicit CorruptFile(const std::string& detail)
      : Error("corrupt file: " + detail) {}
};

}  // namespace rpckit
