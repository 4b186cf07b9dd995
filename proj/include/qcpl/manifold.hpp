#pragma once

#include <memory>
#include <string>

#include "qcpl/rng.hpp"
#include "qcpl/simplex.hpp"

namespace qcpl {

// Orthonormal basis of T_x M, columns ordered to encode the orientation of M
// at x (sphere: outward normal last completes an ambient positive frame;
// products: concatenation of factor frames).
struct TangentFrame {
    Vector base_point;
    Matrix basis;  // m x d

    int dim() const { return static_cast<int>(basis.cols()); }
};

// Closed manifold isometrically embedded in R^m with analytic normal
// projection, exponential/log maps and tangent frames. Only kinds whose
// charts have closed forms are provided: sphere(d, radius), the Clifford
// torus in R^4, and S^3 x S^3 in R^8.
class EmbeddedManifold {
public:
    virtual ~EmbeddedManifold() = default;

    virtual int dim() const = 0;
    virtual int ambient() const = 0;
    virtual double injectivity_radius() const = 0;
    virtual double tube_epsilon() const = 0;
    virtual std::string id() const = 0;

    virtual double distance_to(const Vector& x) const = 0;

    // Closest point on M; requires dist(x, M) < tube_epsilon (OutsideTube).
    Vector project(const Vector& x) const;

    // exp_x(v); v must be tangent at x within 1e-8 (NotTangent).
    Vector exp_map(const Vector& x, const Vector& v) const;

    virtual Vector log_map(const Vector& x, const Vector& y) const = 0;
    virtual double geodesic_distance(const Vector& x, const Vector& y) const = 0;
    virtual TangentFrame frame(const Vector& x) const = 0;

    virtual Vector random_point(Rng& rng) const = 0;

    bool contains(const Vector& x, double tol = 1e-9) const { return distance_to(x) <= tol; }

protected:
    virtual Vector project_impl(const Vector& x) const = 0;
    virtual Vector exp_impl(const Vector& x, const Vector& v) const = 0;
    // Norm of the component of v orthogonal to T_x M.
    virtual double normal_component(const Vector& x, const Vector& v) const = 0;
};

using ManifoldPtr = std::shared_ptr<const EmbeddedManifold>;

ManifoldPtr make_sphere(int d, double radius);
ManifoldPtr make_clifford_torus();
ManifoldPtr make_product_spheres();

// CLI ids: "sphere:d=2,r=1" (r optional), "clifford", "s3xs3".
ManifoldPtr parse_manifold(const std::string& id);

// Signed Euclidean fullness of {log_{s(0)}(s(i))} read in the tangent frame
// at vertex 0. Requires diam(s) < injectivity radius.
double internal_fullness(const EmbeddedManifold& manifold, const Simplex& s);

// Euclidean fullness of the ambient simplex; when s is top dimensional the
// sign comes from the projection of the base vectors to the tangent frame at
// vertex 0.
double ambient_fullness(const EmbeddedManifold& manifold, const Simplex& s);

// Linear dilatation of the orthogonal projection from the secant plane of s
// to the tangent plane at vertex 0.
DilatationValue secant_plane_projection_dilatation(const EmbeddedManifold& manifold,
                                                   const Simplex& s);

}  // namespace qcpl
