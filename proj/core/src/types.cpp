#include "dualpath/types.hpp"

#include <algorithm>
#include <cmath>

namespace dualpath {

PointCloud::PointCloud(std::vector<Eigen::Vector3f> positions) : positions_(std::move(positions)) {
  if (positions_.empty()) {
    throw ValidationError("point cloud is empty");
  }
  for (const auto& p : positions_) {
    if (!p.allFinite()) {
      throw ValidationError("point cloud contains non-finite coordinates");
    }
  }
}

InstanceMask InstanceMask::from_sorted(std::vector<uint32_t> indices) {
  if (indices.empty()) {
    throw ValidationError("instance mask may not be empty");
  }
  for (size_t i = 1; i < indices.size(); ++i) {
    if (indices[i] <= indices[i - 1]) {
      throw ValidationError("instance mask indices must be strictly increasing");
    }
  }
  return InstanceMask(std::move(indices));
}

InstanceMask InstanceMask::from_unsorted(std::vector<uint32_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty()) {
    throw ValidationError("instance mask may not be empty");
  }
  return InstanceMask(std::move(indices));
}

bool InstanceMask::contains(uint32_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

FeatureVector::FeatureVector(std::vector<float> values, bool normalized)
    : values_(std::move(values)), normalized_(normalized) {
  if (values_.empty()) {
    throw ValidationError("feature vector may not be empty");
  }
  for (float v : values_) {
    if (!std::isfinite(v)) {
      throw ValidationError("feature vector contains non-finite components");
    }
  }
  if (normalized_ && std::abs(norm() - 1.0) > 1e-6) {
    throw ValidationError("feature vector flagged normalized but norm differs from 1");
  }
}

double FeatureVector::norm() const {
  double sum = 0.0;
  for (float v : values_) {
    sum += static_cast<double>(v) * static_cast<double>(v);
  }
  return std::sqrt(sum);
}

FeatureVector FeatureVector::normalized() const {
  const double n = norm();
  if (n < 1e-9) {
    throw ZeroVectorError("cannot normalize a near-zero feature vector");
  }
  std::vector<float> out(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) {
    out[i] = static_cast<float>(values_[i] / n);
  }
  return FeatureVector(std::move(out), true);
}

double FeatureVector::dot(const FeatureVector& other) const {
  if (dim() != other.dim()) {
    throw ValidationError("feature dimension mismatch in dot product");
  }
  double sum = 0.0;
  for (size_t i = 0; i < values_.size(); ++i) {
    sum += static_cast<double>(values_[i]) * static_cast<double>(other.values_[i]);
  }
  return sum;
}

double cosine_similarity(const FeatureVector& a, const FeatureVector& b) {
  const double d = a.dot(b);
  if (a.is_normalized() && b.is_normalized()) {
    return d;
  }
  const double na = a.norm();
  const double nb = b.norm();
  if (na < 1e-9 || nb < 1e-9) {
    throw ZeroVectorError("cosine similarity of a near-zero vector");
  }
  return d / (na * nb);
}

std::string to_string(SourcePath source) {
  switch (source) {
    case SourcePath::Path3D:
      return "3d";
    case SourcePath::Path2D:
      return "2d";
    case SourcePath::Merged:
      return "merged";
  }
  throw ValidationError("unknown source path");
}

SourcePath source_path_from_string(const std::string& text) {
  if (text == "3d") return SourcePath::Path3D;
  if (text == "2d") return SourcePath::Path2D;
  if (text == "merged") return SourcePath::Merged;
  throw ValidationError("unknown proposal source '" + text + "'");
}

void ProposalSet::validate() const {
  if (point_count == 0) {
    throw ValidationError("proposal set has zero point count");
  }
  std::vector<std::string> ids;
  ids.reserve(proposals.size());
  for (const auto& p : proposals) {
    if (p.mask.max_index() >= point_count) {
      throw ValidationError("proposal '" + p.id + "': index out of range (" +
                            std::to_string(p.mask.max_index()) + " >= " +
                            std::to_string(point_count) + ")");
    }
    if (p.feature && feature_dim != 0 && p.feature->dim() != feature_dim) {
      throw ValidationError("proposal '" + p.id + "': dimension mismatch (" +
                            std::to_string(p.feature->dim()) + " != " +
                            std::to_string(feature_dim) + ")");
    }
    if (p.score && (*p.score < 0.0f || *p.score > 1.0f)) {
      throw ValidationError("proposal '" + p.id + "': score outside [0,1]");
    }
    ids.push_back(p.id);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw ValidationError("duplicate proposal id in set");
  }
}

DepthMap::DepthMap(uint32_t width, uint32_t height, std::vector<uint16_t> millimeters)
    : width_(width), height_(height), millimeters_(std::move(millimeters)) {
  if (millimeters_.size() != static_cast<size_t>(width_) * height_) {
    throw ValidationError("depth map size does not match width*height");
  }
}

Eigen::Matrix4d CameraFrame::camera_to_world() const {
  const Eigen::Matrix3d r = world_to_camera.block<3, 3>(0, 0);
  const Eigen::Vector3d t = world_to_camera.block<3, 1>(0, 3);
  Eigen::Matrix4d inv = Eigen::Matrix4d::Identity();
  inv.block<3, 3>(0, 0) = r.transpose();
  inv.block<3, 1>(0, 3) = -r.transpose() * t;
  return inv;
}

void CameraFrame::validate() const {
  if (width == 0 || height == 0) {
    throw ValidationError("frame " + std::to_string(frame_id) + ": zero image size");
  }
  if (fx() <= 0.0 || fy() <= 0.0) {
    throw ValidationError("frame " + std::to_string(frame_id) + ": fx and fy must be positive");
  }
  if (cx() < 0.0 || cx() >= width || cy() < 0.0 || cy() >= height) {
    throw ValidationError("frame " + std::to_string(frame_id) +
                          ": principal point outside image");
  }
  const Eigen::Matrix3d r = world_to_camera.block<3, 3>(0, 0);
  const Eigen::Matrix3d delta = r.transpose() * r - Eigen::Matrix3d::Identity();
  if (delta.cwiseAbs().maxCoeff() > 1e-5) {
    throw ValidationError("frame " + std::to_string(frame_id) +
                          ": pose rotation block is not orthonormal");
  }
  if (!depth.empty() && (depth.width() != width || depth.height() != height)) {
    throw ValidationError("frame " + std::to_string(frame_id) +
                          ": depth size does not match frame size");
  }
}

std::string to_string(Subset subset) {
  switch (subset) {
    case Subset::Head:
      return "head";
    case Subset::Common:
      return "common";
    case Subset::Tail:
      return "tail";
  }
  throw ValidationError("unknown subset");
}

Subset subset_from_string(const std::string& text) {
  if (text == "head") return Subset::Head;
  if (text == "common") return Subset::Common;
  if (text == "tail") return Subset::Tail;
  throw ValidationError("unknown class subset '" + text + "'");
}

const ClassInfo& ClassTable::at(int class_id) const {
  auto it = classes.find(class_id);
  if (it == classes.end()) {
    throw ValidationError("class id " + std::to_string(class_id) + " not in class table");
  }
  return it->second;
}

void GroundTruth::validate() const {
  for (const auto& inst : instances) {
    if (inst.mask.max_index() >= point_count) {
      throw ValidationError("ground-truth instance '" + inst.id + "': index out of range");
    }
    if (!classes.contains(inst.class_id)) {
      throw ValidationError("ground-truth instance '" + inst.id + "': class id " +
                            std::to_string(inst.class_id) + " not in class table");
    }
  }
}

}  // namespace dualpath
