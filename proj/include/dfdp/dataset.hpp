#ifndef DFDP_DATASET_HPP
#define DFDP_DATASET_HPP

#include <filesystem>
#include <optional>

#include "dfdp/types.hpp"

namespace dfdp {

/// Point cloud with stable indices: row i of `points` is data row i of the
/// input file, and stays row i through the whole pipeline.
struct Dataset {
    Matrix points;  // n x d, all entries finite

    Index n() const { return points.rows(); }
    Index dim() const { return points.cols(); }
};

enum class InputFormat { csv, whitespace };

enum class Metric { euclidean };

/// Full symmetric pairwise-distance matrix plus the two extremes every
/// downstream stage keys off.
struct DistanceMatrix {
    Matrix dist;                      // n x n, zero diagonal
    double d_max = 0.0;               // largest off-diagonal entry (0 when n == 1)
    std::optional<double> d_min_pos;  // smallest strictly positive entry; absent
                                      // when all points coincide
    Index n() const { return dist.rows(); }
};

/// Reads delimiter-separated numeric rows, one point per row. An optional
/// single header row is skipped when `has_header` is set. Throws ParseError
/// on unreadable files, ragged rows, non-numeric or non-finite cells, and
/// files with zero data rows.
Dataset load_dataset(const std::filesystem::path& path, InputFormat format,
                     bool has_header);

DistanceMatrix pairwise_distances(const Dataset& ds,
                                  Metric metric = Metric::euclidean);

}  // namespace dfdp

#endif  // DFDP_DATASET_HPP
