#pragma once

#include <limits>

#include "qcpl/geometry.hpp"

namespace qcpl {

// Ordered vertex tuple of a d'-simplex in R^m, columns of an m x (d'+1)
// matrix. Repeated vertices are allowed (the simplex is then degenerate).
class Simplex {
public:
    explicit Simplex(Matrix vertices);

    int dim() const { return static_cast<int>(vertices_.cols()) - 1; }
    int ambient() const { return static_cast<int>(vertices_.rows()); }
    const Matrix& vertices() const { return vertices_; }
    Vector vertex(int i) const { return vertices_.col(i); }

    // Columns vertices[i] - vertices[0], i = 1..d'.
    Matrix base_vectors() const;
    double diameter() const;

    // Rank deficiency of the base vectors, singular values below
    // 1e-10 * sigma_max counting as zero.
    bool degenerate() const;

private:
    Matrix vertices_;
};

struct AffineMap {
    Matrix linear;
    Vector offset;

    Vector apply(const Vector& x) const { return linear * x + offset; }
    // |det| > 1e-12 * sigma_max^d.
    bool invertible() const;
};

// this(x) = a(b(x)).
AffineMap affine_compose(const AffineMap& a, const AffineMap& b);

// Value in [1, +inf]; +inf encodes orientation failure.
struct DilatationValue {
    double value = 1.0;

    bool finite() const { return std::isfinite(value); }
    static DilatationValue infinite() {
        return DilatationValue{std::numeric_limits<double>::infinity()};
    }
};

// sqrt(det(G^T G)) / d'! with G the base vectors; exactly 0 for simplices
// degenerate within the rank tolerance.
double simplex_volume(const Simplex& s);

// |result| = vol / diam^{d'}. The sign is the orientation of the base vectors
// and is only defined top-dimensionally (d' == m); lower-dimensional simplices
// get the unsigned value.
double fullness_signed(const Simplex& s);

// Same, with orientation read in an orthonormal frame (m x d' columns). Used
// for simplices on oriented manifolds where the frame encodes orientation.
double fullness_signed(const Simplex& s, const Matrix& frame);

// Unique affine map with src.vertex(i) -> dst.vertex(i). Both simplices must
// be top dimensional; throws DegenerateSource.
AffineMap affine_map_between(const Simplex& src, const Simplex& dst);

// sigma_max / sigma_min of the linear part. Throws Singular.
DilatationValue linear_dilatation(const AffineMap& a);

// K(A) against a representative of the reference shape if s is positively
// oriented, +inf if s is degenerate or negatively oriented. Invariant under
// similarities of s and under change of representative.
DilatationValue affine_ellipticity(const Simplex& s, const Shape& reference);

}  // namespace qcpl
