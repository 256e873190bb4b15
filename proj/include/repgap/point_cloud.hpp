#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace repgap {

/// Finite ordered set of ambient-space points, stored row-major.
/// Invariants: every point has length dim(); no NaN/Inf coordinates
/// (checked by validate(), enforced on file ingestion).
class PointCloud {
 public:
  PointCloud() = default;
  explicit PointCloud(std::size_t ambient_dim) : dim_(ambient_dim) {}
  PointCloud(std::size_t ambient_dim, std::vector<double> data);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  bool empty() const { return data_.empty(); }

  std::span<const double> operator[](std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  std::span<double> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }

  void push_back(std::span<const double> p);
  void reserve(std::size_t n) { data_.reserve(n * dim_); }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  /// Throws std::invalid_argument on non-finite coordinates or ragged data.
  void validate() const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

double sq_dist(std::span<const double> a, std::span<const double> b);

/// Shared cloud formats.
/// CSV: header `x0,...,x{d-1}`, one point per row, LF endings, floats
/// printed with 17 significant digits (round-trip exact).
/// Binary: magic "RGPC", u32 LE count, u32 LE ambient_dim, then
/// count*dim f64 LE row-major.
void write_cloud_csv(const PointCloud& cloud, const std::string& path);
PointCloud read_cloud_csv(const std::string& path);
void write_cloud_binary(const PointCloud& cloud, const std::string& path);
PointCloud read_cloud_binary(const std::string& path);

/// Picks a reader by extension (.csv vs anything else = binary).
PointCloud read_cloud_auto(const std::string& path);

std::string format_double(double v);  // %.17g

}  // namespace repgap
