#pragma once

#include <cstdint>
#include <vector>

#include "qcpl/parallel.hpp"
#include "qcpl/smooth_map.hpp"

namespace qcpl {

// Geometric radius schedule r_k = r0 * 2^-k, k = 0..k_max.
struct RadiusSchedule {
    double r0 = 0.1;
    int k_max = 4;

    std::vector<double> radii() const;
};

struct DilatationEstimate {
    double pointwise_max = 1.0;
    Vector at_point;
    std::vector<double> radius_schedule;
    int samples_per_sphere = 0;
    // sup/inf image-distance ratio per radius, at the reported point.
    std::vector<double> per_radius_values;
};

// Samples n points on the geodesic sphere of each scheduled radius about x
// and reports the max sup/inf ratio over the last three radii. Directions are
// a seeded deterministic set per tangent frame. Requires k_max >= 3
// (ScheduleTooCoarse) and r0 < 0.5 * injectivity radius.
DilatationEstimate estimate_pointwise_dilatation(const SmoothMap& map, const Vector& x,
                                                 const RadiusSchedule& schedule, int n_samples,
                                                 std::uint64_t seed);

// Max of pointwise estimates over quasi-uniform samples: subdivision vertices
// of a fixed seed level plus seeded random points.
DilatationEstimate estimate_global_dilatation(const SmoothMap& map, int n_points,
                                              const RadiusSchedule& schedule, int n_samples,
                                              std::uint64_t seed, Exec exec = Exec::Parallel);

}  // namespace qcpl
