#ifndef DFDP_REPORT_HPP
#define DFDP_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfdp/datafield.hpp"
#include "dfdp/dpc.hpp"

namespace dfdp {

/// One clustering run reduced to what the comparison table reports.
/// sigma_star and h_min are absent for manual-threshold runs.
struct RunSummary {
    std::optional<double> sigma_star;
    double dc = 0.0;
    std::optional<double> h_min;  // nats
    int n_clusters = 0;
    int noise_count = 0;
    std::vector<int> center_indices;
};

/// Manual vs entropy-derived threshold on the identical dataset, identical
/// kernel and center strategy; the cutoff is the only difference.
struct ComparisonRow {
    std::string dataset_name;
    RunSummary manual;
    RunSummary datafield;
};

enum class TableFormat { tsv, json };

RunSummary make_run_summary(const DpcResult& result, double dc,
                            std::optional<double> sigma_star = std::nullopt,
                            std::optional<double> h_min = std::nullopt);

ComparisonRow compare(const Dataset& ds, std::string_view dataset_name,
                      double manual_dc, const CenterStrategy& strategy,
                      DensityKernel kernel, const SigmaSearchConfig& cfg = {});

/// tsv: header `dataset  manual_noise  manual_dc  field_noise  field_dc`
/// (tab-separated), thresholds at 6 decimals, counts unrounded. json: a
/// schema-stable array of ComparisonRow records at full precision, so
/// parsing the output reproduces every field exactly.
std::string render_table(const std::vector<ComparisonRow>& rows,
                         TableFormat format);

std::string render_run_summary_json(const RunSummary& summary);

}  // namespace dfdp

#endif  // DFDP_REPORT_HPP
