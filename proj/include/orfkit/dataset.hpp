#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace orfkit {

/// Point cloud with one point per row.
class Dataset {
 public:
  /// Throws InvalidArgument if fewer than two rows or any entry is not finite.
  Dataset(Eigen::MatrixXd points, std::string name, std::string source);

  const Eigen::MatrixXd& points() const { return points_; }
  int n() const { return static_cast<int>(points_.rows()); }
  int d() const { return static_cast<int>(points_.cols()); }
  const std::string& name() const { return name_; }
  const std::string& source() const { return source_; }

 private:
  Eigen::MatrixXd points_;
  std::string name_;
  std::string source_;
};

struct CsvOptions {
  char delimiter = ',';
  bool header = false;
  std::optional<int> drop_column;  ///< zero-based index of a label column to discard
};

/// Reads a delimited text file of numeric cells. Errors are IoError and
/// name the file and, for bad cells, the 1-based row and column.
Dataset load_dataset(const std::string& path, const CsvOptions& options = {});

/// n x d i.i.d. standard normal points.
Dataset synthetic_dataset(int n, int d, std::uint64_t seed);

/// sigma = sqrt((1/n^2) sum_{i,j} |x_i - x_j|^2), diagonal terms included.
double bandwidth_heuristic(const Eigen::Ref<const Eigen::MatrixXd>& x);

}  // namespace orfkit
