#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qcpl/dilatation.hpp"
#include "qcpl/triangulation.hpp"

namespace qcpl {

// Secant approximation of a map along a triangulation: vertices go to their
// images, evaluation interpolates in the ambient space and projects back to
// the target by nu.
struct PLMap {
    std::shared_ptr<const Triangulation> source;
    std::vector<double> vertex_images;  // target.ambient() per source vertex
    ManifoldPtr target;

    Eigen::Map<const Vector> image(std::int64_t v) const {
        return Eigen::Map<const Vector>(vertex_images.data() + v * target->ambient(),
                                        target->ambient());
    }
    // Ambient interpolation at barycentric weights in the given cell.
    Vector interpolate(std::int64_t cell, const Vector& weights) const;
    // nu of the interpolation; OutsideTube when the point leaves the tube.
    Vector evaluate(std::int64_t cell, const Vector& weights) const;
};

PLMap secant_approximate(const SmoothMap& map, std::shared_ptr<const Triangulation> t,
                         Exec exec = Exec::Parallel);

struct PLCertificate {
    bool all_small = false;
    std::vector<std::int8_t> orientation_signs;
    int degree = 0;
    bool is_pl_homeomorphism = false;
    std::vector<std::int64_t> failures;  // cells failing smallness or orientation
    Vector regular_value;
    int regular_value_attempts = 0;
};

// Per-cell smallness (hull samples inside the tube with margin 0.9) and
// orientation (tangent-frame determinant at the image of vertex 0), plus the
// topological degree counted at a deterministically perturbed regular value.
// Certifies when degree == 1, all signs positive and all cells small.
PLCertificate certify(const PLMap& plmap, std::uint64_t seed = 0,
                      Exec exec = Exec::Parallel);

struct ApproximationReport {
    double c0_error = 0.0;
    double max_affine_ellipticity = 1.0;  // +inf when some cell reverses
    double mesh_size = 0.0;
    int level = 0;
};

// c0 error over a barycentric probe grid of depth two plus seeded random
// probes per cell; per-cell dilatation of the affine map between the log
// charts at vertex 0 of the source and image cells.
ApproximationReport report(const SmoothMap& map, const PLMap& plmap, int random_probes_per_cell,
                           std::uint64_t seed = 0, Exec exec = Exec::Parallel);

}  // namespace qcpl
