#include "orfkit/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "orfkit/errors.hpp"
#include "orfkit/rng.hpp"

namespace orfkit {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      return cells;
    }
    cells.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
}

}  // namespace

Dataset::Dataset(Eigen::MatrixXd points, std::string name, std::string source)
    : points_(std::move(points)), name_(std::move(name)), source_(std::move(source)) {
  if (points_.rows() < 2) throw InvalidArgument("dataset needs at least two points");
  if (points_.cols() < 1) throw InvalidArgument("dataset needs at least one column");
  if (!points_.allFinite()) throw InvalidArgument("dataset contains non-finite entries");
}

Dataset load_dataset(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset file: " + path);

  std::vector<double> values;
  std::size_t width = 0;
  std::size_t rows = 0;
  std::string line;
  int line_no = 0;
  bool header_pending = options.header;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    const auto cells = split(line, options.delimiter);
    std::size_t kept = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (options.drop_column && static_cast<int>(c) == *options.drop_column) continue;
      double v = 0.0;
      const auto cell = cells[c];
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        std::ostringstream msg;
        msg << path << ": non-numeric cell '" << cell << "' at row " << line_no << ", column "
            << (c + 1);
        throw IoError(msg.str());
      }
      values.push_back(v);
      ++kept;
    }
    if (rows == 0) {
      width = kept;
    } else if (kept != width) {
      std::ostringstream msg;
      msg << path << ": row " << line_no << " has " << kept << " fields, expected " << width;
      throw IoError(msg.str());
    }
    ++rows;
  }
  if (in.bad()) throw IoError("read failure on " + path);
  if (rows == 0 || width == 0) throw IoError(path + ": no data rows");

  Eigen::MatrixXd x(rows, width);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < width; ++c) x(r, c) = values[r * width + c];
  }
  std::string name = path.substr(path.find_last_of('/') + 1);
  return Dataset(std::move(x), std::move(name), path);
}

Dataset synthetic_dataset(int n, int d, std::uint64_t seed) {
  if (n < 2 || d < 1) throw InvalidArgument("synthetic_dataset: need n >= 2 and d >= 1");
  Eigen::MatrixXd x(n, d);
  // Row-major fill so that point i does not depend on n.
  std::vector<double> buf(static_cast<std::size_t>(n) * d);
  fill_standard_normal(buf.begin(), buf.end(), seed);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) x(i, j) = buf[static_cast<std::size_t>(i) * d + j];
  }
  return Dataset(std::move(x), "synthetic", "synthetic");
}

double bandwidth_heuristic(const Eigen::Ref<const Eigen::MatrixXd>& x) {
  const Eigen::Index n = x.rows();
  if (n < 2) throw InvalidArgument("bandwidth_heuristic: need at least two points");
  // sum_{i,j} |x_i - x_j|^2 = 2 n sum_i |x_i - mean|^2
  const Eigen::RowVectorXd mean = x.colwise().mean();
  const double spread = (x.rowwise() - mean).squaredNorm();
  return std::sqrt(2.0 * spread / static_cast<double>(n));
}

}  // namespace orfkit
