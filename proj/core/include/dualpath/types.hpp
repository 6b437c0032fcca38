#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dualpath/errors.hpp"

namespace dualpath {

inline constexpr uint32_t kDefaultFeatureDim = 768;

// Reconstructed scene geometry, world frame, meters. Mask index space is [0, size()).
class PointCloud {
 public:
  PointCloud() = default;
  explicit PointCloud(std::vector<Eigen::Vector3f> positions);

  uint32_t size() const { return static_cast<uint32_t>(positions_.size()); }
  const std::vector<Eigen::Vector3f>& positions() const { return positions_; }
  const Eigen::Vector3f& operator[](uint32_t i) const { return positions_[i]; }

 private:
  std::vector<Eigen::Vector3f> positions_;
};

// Sparse encoding of a binary point mask: strictly increasing point indices,
// never empty.
class InstanceMask {
 public:
  // Takes a strictly increasing, duplicate-free index list.
  static InstanceMask from_sorted(std::vector<uint32_t> indices);
  // Sorts and deduplicates first.
  static InstanceMask from_unsorted(std::vector<uint32_t> indices);

  const std::vector<uint32_t>& indices() const { return indices_; }
  uint32_t size() const { return static_cast<uint32_t>(indices_.size()); }
  uint32_t max_index() const { return indices_.back(); }
  bool contains(uint32_t index) const;

  bool operator==(const InstanceMask& other) const = default;

 private:
  explicit InstanceMask(std::vector<uint32_t> indices) : indices_(std::move(indices)) {}
  std::vector<uint32_t> indices_;
};

// Dense real-valued feature. Values are kept exactly as provided; the
// normalized flag records that unit norm has been checked, so cosine
// computations can skip renormalization.
class FeatureVector {
 public:
  explicit FeatureVector(std::vector<float> values, bool normalized = false);

  const std::vector<float>& values() const { return values_; }
  uint32_t dim() const { return static_cast<uint32_t>(values_.size()); }
  bool is_normalized() const { return normalized_; }

  double norm() const;
  // Unit-length copy; throws ZeroVectorError when the norm is below 1e-9.
  FeatureVector normalized() const;

  double dot(const FeatureVector& other) const;

  bool operator==(const FeatureVector& other) const { return values_ == other.values_; }

 private:
  std::vector<float> values_;
  bool normalized_ = false;
};

// Cosine similarity; normalizes on the fly unless both sides are flagged unit.
double cosine_similarity(const FeatureVector& a, const FeatureVector& b);

enum class SourcePath { Path3D, Path2D, Merged };

std::string to_string(SourcePath source);
SourcePath source_path_from_string(const std::string& text);

struct Proposal {
  std::string id;
  InstanceMask mask;
  std::optional<FeatureVector> feature;
  SourcePath source = SourcePath::Path3D;
  std::optional<float> score;  // in [0,1] when present
};

struct ProposalSet {
  uint32_t point_count = 0;
  uint32_t feature_dim = 0;
  std::vector<Proposal> proposals;

  // Checks index bounds, id uniqueness, feature dimensions and score ranges.
  void validate() const;
};

// Range depth image; raw values are millimeters, 0 marks an invalid pixel.
class DepthMap {
 public:
  DepthMap() = default;
  DepthMap(uint32_t width, uint32_t height, std::vector<uint16_t> millimeters);

  uint32_t width() const { return width_; }
  uint32_t height() const { return height_; }
  bool empty() const { return millimeters_.empty(); }

  uint16_t raw(uint32_t x, uint32_t y) const { return millimeters_[y * width_ + x]; }
  bool valid(uint32_t x, uint32_t y) const { return raw(x, y) != 0; }
  double meters(uint32_t x, uint32_t y) const { return raw(x, y) / 1000.0; }

  const std::vector<uint16_t>& data() const { return millimeters_; }
  std::vector<uint16_t>& data() { return millimeters_; }

 private:
  uint32_t width_ = 0;
  uint32_t height_ = 0;
  std::vector<uint16_t> millimeters_;
};

// One posed RGB-D frame: pinhole intrinsics, world-to-camera rigid transform,
// and the range image.
struct CameraFrame {
  uint32_t frame_id = 0;
  uint32_t width = 0;
  uint32_t height = 0;
  Eigen::Matrix3d intrinsics = Eigen::Matrix3d::Identity();
  Eigen::Matrix4d world_to_camera = Eigen::Matrix4d::Identity();
  DepthMap depth;

  double fx() const { return intrinsics(0, 0); }
  double fy() const { return intrinsics(1, 1); }
  double cx() const { return intrinsics(0, 2); }
  double cy() const { return intrinsics(1, 2); }

  Eigen::Matrix4d camera_to_world() const;

  // fx,fy positive, principal point inside the image, rotation orthonormal
  // within 1e-5.
  void validate() const;
};

enum class Subset { Head, Common, Tail };

std::string to_string(Subset subset);
Subset subset_from_string(const std::string& text);

struct ClassInfo {
  std::string name;
  Subset subset = Subset::Head;
};

struct ClassTable {
  std::map<int, ClassInfo> classes;

  bool contains(int class_id) const { return classes.count(class_id) != 0; }
  const ClassInfo& at(int class_id) const;
};

struct GtInstance {
  std::string id;
  InstanceMask mask;
  int class_id = 0;
};

struct GroundTruth {
  uint32_t point_count = 0;
  std::vector<GtInstance> instances;
  ClassTable classes;

  void validate() const;
};

struct Scene {
  PointCloud cloud;
  std::vector<CameraFrame> frames;
};

}  // namespace dualpath
