#ifndef DFDP_DPC_HPP
#define DFDP_DPC_HPP

#include <vector>

#include "dfdp/dataset.hpp"

namespace dfdp {

enum class DensityKernel { gaussian, cutoff };

/// How cluster centers are picked from the decision values gamma = rho * delta.
struct CenterStrategy {
    enum class Kind { top_k, gamma_gap };

    Kind kind = Kind::gamma_gap;
    int k = 0;              // top_k only
    int max_gap_rank = 50;  // gamma_gap: deepest rank considered for the gap

    static CenterStrategy top_k(int k) {
        return {Kind::top_k, k, 50};
    }
    static CenterStrategy gamma_gap(int max_rank = 50) {
        return {Kind::gamma_gap, 0, max_rank};
    }
};

struct DpcParams {
    double dc = 0.0;
    DensityKernel kernel = DensityKernel::gaussian;
    CenterStrategy centers;
};

/// Per-point clustering state. Density ranks order points by (rho
/// descending, index ascending); exactly one point tops that order, has
/// nneigh == -1, and carries delta = d_max. Every other point's nneigh is
/// the closest strictly-higher-ranked point (distance ties to the lower
/// index) and delta is that distance.
struct DpcState {
    Vector rho;
    Vector delta;
    IndexVector nneigh;  // -1 only for the top-ranked point
    Vector gamma;        // rho * delta, elementwise
};

struct Partition {
    IndexVector labels;        // contiguous ids 0..k-1
    std::vector<int> centers;  // ascending; centers[c] carries label c
    BoolArray is_halo;
    int noise_count = 0;
};

/// Local density of the clustering stage; the self term is excluded, unlike
/// the field potential. gaussian: rho[i] = sum_{j != i} exp(-(d_ij/dc)^2);
/// cutoff: rho[i] = |{j != i : d_ij < dc}|.
Vector local_density(const DistanceMatrix& dm, const DpcParams& params);

/// rho is carried through into the returned state.
DpcState delta_and_neighbor(const DistanceMatrix& dm, const Vector& rho);

/// top_k: the k largest-gamma points (ties to the lower index). gamma_gap:
/// scan ranks r = 1..min(n-1, max_gap_rank) of the descending gamma order
/// for the largest ratio gamma[r]/gamma[r+1] and keep the top r points; a
/// curve with no usable gap (all gammas equal or zero) yields one center.
std::vector<int> select_centers(const DpcState& state,
                                const CenterStrategy& strategy);

/// Centers receive labels 0..k-1 in ascending index order; the rest inherit
/// their nneigh's label in decreasing density-rank order. A top-ranked point
/// that is not itself a center joins the nearest center (ties to the lower
/// index), which is why the distance matrix is needed here.
IndexVector assign_clusters(const DistanceMatrix& dm, const DpcState& state,
                            const std::vector<int>& centers);

struct HaloResult {
    BoolArray is_halo;
    int noise_count = 0;
};

/// Border density of cluster c is the largest (rho[i]+rho[j])/2 over pairs
/// within dc that straddle c's boundary; points below their cluster's border
/// density are halo (the "removed noise" of the comparison report).
HaloResult detect_halo(const DistanceMatrix& dm, const DpcParams& params,
                       const Vector& rho, const IndexVector& labels);

struct DpcResult {
    DpcState state;
    Partition partition;
};

/// local_density -> delta_and_neighbor -> select_centers -> assign_clusters
/// -> detect_halo, with all intermediate state kept for export.
DpcResult run_dpc(const DistanceMatrix& dm, const DpcParams& params);

}  // namespace dfdp

#endif  // DFDP_DPC_HPP
