#ifndef DFDP_DATAFIELD_HPP
#define DFDP_DATAFIELD_HPP

#include <optional>
#include <vector>

#include "dfdp/dataset.hpp"

namespace dfdp {

/// Field potentials phi[i] = sum_j exp(-(dist(i,j)/sigma)^2) with the self
/// term included, so 1 <= phi[i] <= n, and z = sum_i phi[i] > 0.
struct PotentialVector {
    Vector phi;
    double z = 0.0;
};

struct SigmaSample {
    double sigma;
    double entropy;  // nats
};

/// A sampled (sigma, H) curve. entropy_curve fills only `samples`;
/// optimize_sigma additionally sets the minimizer and the derived cutoff.
struct FieldScan {
    std::vector<SigmaSample> samples;  // strictly increasing sigma
    std::optional<double> sigma_star;
    std::optional<double> h_min;
    std::optional<double> dc;  // (3/sqrt(2)) * sigma_star
};

struct SigmaSearchConfig {
    int coarse_steps = 200;        // log-spaced samples across [sigma_min, sigma_max]
    double sigma_min = 0.0;        // <= 0 means auto: max(1e-3 * d_min_pos, 1e-12)
    double sigma_max = 0.0;        // <= 0 means auto: 10 * d_max
    double refine_rel_tol = 1e-6;  // stop when bracket width < tol * midpoint
    double flat_spread = 1e-9;     // coarse max-min entropy below this => degenerate
    double tie_eps = 1e-12;        // coarse minima within this tie; smallest sigma wins
};

PotentialVector potentials(const DistanceMatrix& dm, double sigma);

/// Shannon entropy (nats) of the normalized potential distribution,
/// H = -sum_i (phi_i/z) ln(phi_i/z). phi_i >= 1 keeps every term finite.
double entropy(const PotentialVector& pv);

/// The sigma grid optimize_sigma scans: cfg.coarse_steps log-spaced values
/// over the (resolved) [sigma_min, sigma_max] range.
std::vector<double> default_sigma_grid(const DistanceMatrix& dm,
                                       const SigmaSearchConfig& cfg = {});

/// Samples H(sigma) on the given grid. The grid must be non-empty, strictly
/// increasing, and positive throughout.
FieldScan entropy_curve(const DistanceMatrix& dm,
                        const std::vector<double>& grid);

/// Two-phase minimizer of H(sigma): a coarse log-spaced scan (kept in
/// `samples` for export) guards against multiple basins, then golden-section
/// refinement sharpens the bracket around the best coarse sample until its
/// width drops below refine_rel_tol relative to the midpoint. Throws
/// DegenerateFieldError when fewer than two distinct points exist or the
/// coarse curve is flat to within flat_spread.
FieldScan optimize_sigma(const DistanceMatrix& dm,
                         const SigmaSearchConfig& cfg = {});

/// Influence radius of a Gaussian field with impact factor sigma:
/// (3/sqrt(2)) * sigma, the cutoff distance handed to the clustering stage.
double derive_dc(double sigma);

}  // namespace dfdp

#endif  // DFDP_DATAFIELD_HPP
