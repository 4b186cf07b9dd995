#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcpl/manifold.hpp"
#include "qcpl/parallel.hpp"
#include "qcpl/simplex.hpp"

namespace qcpl {

// Oriented simplicial complex with vertex coordinates. Storage is flat so the
// level-2 product meshes (tens of millions of cells) stay cache friendly.
class Triangulation {
public:
    Triangulation(int dim, int ambient) : dim_(dim), ambient_(ambient) {}

    int dim() const { return dim_; }
    int ambient() const { return ambient_; }
    std::int64_t vertex_count() const {
        return static_cast<std::int64_t>(coords_.size()) / ambient_;
    }
    std::int64_t cell_count() const {
        return static_cast<std::int64_t>(cells_.size()) / (dim_ + 1);
    }

    Eigen::Map<const Vector> vertex(std::int64_t i) const {
        return Eigen::Map<const Vector>(coords_.data() + i * ambient_, ambient_);
    }
    const std::int32_t* cell(std::int64_t c) const { return cells_.data() + c * (dim_ + 1); }

    std::int32_t add_vertex(const Vector& p);
    void add_cell(const std::int32_t* idx);
    void reserve(std::int64_t nv, std::int64_t nc);

    Simplex cell_simplex(std::int64_t c) const;
    double cell_diameter(std::int64_t c) const;
    double mesh_size(Exec exec = Exec::Parallel) const;

    std::vector<double>& raw_coords() { return coords_; }
    const std::vector<double>& raw_coords() const { return coords_; }
    std::vector<std::int32_t>& raw_cells() { return cells_; }
    const std::vector<std::int32_t>& raw_cells() const { return cells_; }

private:
    int dim_;
    int ambient_;
    std::vector<double> coords_;        // ambient * nv
    std::vector<std::int32_t> cells_;   // (dim+1) * nc
};

struct ValidationReport {
    bool valid = true;
    std::string message;
    std::vector<std::int64_t> offending_cells;
};

// Checks: no repeated vertex index in a cell, every (d-1)-face shared by
// exactly two cells with opposite induced orientations, connected dual graph.
// Reports the first violation.
ValidationReport validate(const Triangulation& t);

// Explicit seed complexes: sphere(d) is the boundary of the (d+1)-cross-
// polytope scaled to the sphere, the Clifford torus is an n x n diagonal-split
// grid, and S^3 x S^3 is the staircase product of two sphere(3) seeds.
Triangulation seed_triangulation(const EmbeddedManifold& manifold, int torus_grid = 3);

// One level of edgewise (Freudenthal-style) subdivision into 2^d subcells per
// cell; edge midpoints are reprojected to the manifold. Orientation coherence
// is preserved. Throws NotOnManifold if t is not attached to the manifold.
Triangulation subdivide(const Triangulation& t, const EmbeddedManifold& manifold,
                        Exec exec = Exec::Parallel);

struct QualityAudit {
    double mesh_size = 0.0;
    double min_ambient_fullness = 0.0;
    std::optional<double> min_internal_fullness;
    // Decile counts of the audited fullness between its min and max.
    std::vector<std::int64_t> histogram;
    double histogram_min = 0.0;
    double histogram_max = 0.0;
};

// Mesh size and fullness floors over all cells; internal fullness is filled
// when a manifold is attached (InjectivityRadiusExceeded if some cell is too
// large for the exp chart).
QualityAudit audit(const Triangulation& t, const EmbeddedManifold* manifold = nullptr,
                   Exec exec = Exec::Parallel);

// V - E + F - ... by face enumeration. Intended for the d <= 3 test meshes.
std::int64_t euler_characteristic(const Triangulation& t);

}  // namespace qcpl
