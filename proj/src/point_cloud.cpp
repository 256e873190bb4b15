#include "repgap/point_cloud.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace repgap {

PointCloud::PointCloud(std::size_t ambient_dim, std::vector<double> data)
    : dim_(ambient_dim), data_(std::move(data)) {
  if (dim_ == 0 || data_.size() % dim_ != 0)
    throw std::invalid_argument("PointCloud: data size not a multiple of ambient_dim");
}

void PointCloud::push_back(std::span<const double> p) {
  if (p.size() != dim_)
    throw std::invalid_argument("PointCloud::push_back: dimension mismatch");
  data_.insert(data_.end(), p.begin(), p.end());
}

void PointCloud::validate() const {
  if (dim_ == 0 && !data_.empty())
    throw std::invalid_argument("PointCloud: points with ambient_dim 0");
  for (double v : data_)
    if (!std::isfinite(v))
      throw std::invalid_argument("PointCloud: non-finite coordinate");
}

double sq_dist(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_cloud_csv(const PointCloud& cloud, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: keep LF on all platforms
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (std::size_t j = 0; j < cloud.dim(); ++j)
    out << (j ? "," : "") << "x" << j;
  out << "\n";
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud[i];
    for (std::size_t j = 0; j < cloud.dim(); ++j)
      out << (j ? "," : "") << format_double(p[j]);
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

PointCloud read_cloud_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path);
  std::size_t dim = 1;
  for (char c : line)
    if (c == ',') ++dim;
  PointCloud cloud(dim);
  std::vector<double> p(dim);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    for (std::size_t j = 0; j < dim; ++j) {
      if (!std::getline(ss, cell, ','))
        throw std::runtime_error("short csv row in " + path);
      p[j] = std::stod(cell);
    }
    cloud.push_back(p);
  }
  cloud.validate();
  return cloud;
}

namespace {

void put_u32_le(std::ofstream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32_le(std::ifstream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64_le(std::ofstream& out, double v) {
  std::uint64_t u;
  std::memcpy(&u, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(u >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64_le(std::ifstream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &u, 8);
  return v;
}

}  // namespace

void write_cloud_binary(const PointCloud& cloud, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write("RGPC", 4);
  put_u32_le(out, static_cast<std::uint32_t>(cloud.size()));
  put_u32_le(out, static_cast<std::uint32_t>(cloud.dim()));
  for (double v : cloud.data()) put_f64_le(out, v);
  if (!out) throw std::runtime_error("write failed: " + path);
}

PointCloud read_cloud_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "RGPC", 4) != 0)
    throw std::runtime_error("bad magic (expected RGPC): " + path);
  const std::uint32_t count = get_u32_le(in);
  const std::uint32_t dim = get_u32_le(in);
  if (dim == 0) throw std::runtime_error("zero ambient_dim in " + path);
  std::vector<double> data(static_cast<std::size_t>(count) * dim);
  for (double& v : data) v = get_f64_le(in);
  if (!in) throw std::runtime_error("truncated cloud file: " + path);
  PointCloud cloud(dim, std::move(data));
  cloud.validate();
  return cloud;
}

PointCloud read_cloud_auto(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return read_cloud_csv(path);
  return read_cloud_binary(path);
}

}  // namespace repgap
