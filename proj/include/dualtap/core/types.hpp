#pragma once

#include <Eigen/Core>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualtap {

using Real = double;
using MatrixR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VectorR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using ArrayR = Eigen::Array<Real, Eigen::Dynamic, 1>;

/// Dense planar tensor: `channels` planes of `height x width`, stored as one
/// Eigen matrix with one column per channel (pixel index = y * width + x).
/// Images are TensorT with 3 channels and values in [0,1]; attention maps
/// use a single channel.
template <class Scalar>
struct TensorT {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  int channels = 0;
  int height = 0;
  int width = 0;
  Mat d;  // (height*width) rows, `channels` cols

  TensorT() = default;
  TensorT(int c, int h, int w) : channels(c), height(h), width(w), d(Mat::Zero(h * w, c)) {}

  static TensorT constant(int c, int h, int w, Scalar v) {
    TensorT t(c, h, w);
    t.d.setConstant(v);
    return t;
  }

  Scalar& at(int c, int y, int x) { return d(y * width + x, c); }
  Scalar at(int c, int y, int x) const { return d(y * width + x, c); }

  Eigen::Index pixels() const { return Eigen::Index(height) * width; }
  Eigen::Index size() const { return d.size(); }
  bool same_shape(const TensorT& o) const {
    return channels == o.channels && height == o.height && width == o.width;
  }

  auto plane(int c) { return d.col(c); }
  auto plane(int c) const { return d.col(c); }

  void setZero() { d.setZero(); }
};

using Tensor = TensorT<Real>;

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void require_shape(const Tensor& a, int c, int h, int w, const std::string& who) {
  if (a.channels != c || a.height != h || a.width != w) {
    throw std::invalid_argument(who + ": expected " + std::to_string(c) + "x" + std::to_string(h) +
                                "x" + std::to_string(w) + ", got " + std::to_string(a.channels) +
                                "x" + std::to_string(a.height) + "x" + std::to_string(a.width));
  }
}

/// Elementwise clamp to [0,1].
inline Tensor clip01(const Tensor& x) {
  Tensor out = x;
  out.d = out.d.array().max(Real(0)).min(Real(1)).matrix();
  return out;
}

/// QA pair and QA set as used by the surrogate and training losses.
struct QAPair {
  std::string question;
  std::string answer;
};
using QASet = std::vector<QAPair>;

}  // namespace dualtap
