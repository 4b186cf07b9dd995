#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcpl/manifold.hpp"
#include "qcpl/moebius.hpp"

namespace qcpl {

// Analytic test homeomorphism between supported manifolds. Every kind is a
// homeomorphism by construction and evaluable at every point of its domain.
class SmoothMap {
public:
    virtual ~SmoothMap() = default;

    // Requires x on the domain manifold within 1e-9 (OffManifold).
    Vector apply(const Vector& x) const;

    virtual std::optional<double> nominal_dilatation() const = 0;
    virtual bool orientation_preserving() const { return true; }
    virtual std::string describe() const = 0;

    const ManifoldPtr& domain() const { return domain_; }
    const ManifoldPtr& codomain() const { return codomain_; }

protected:
    SmoothMap(ManifoldPtr domain, ManifoldPtr codomain)
        : domain_(std::move(domain)), codomain_(std::move(codomain)) {}
    virtual Vector apply_impl(const Vector& x) const = 0;

    ManifoldPtr domain_;
    ManifoldPtr codomain_;
};

using MapPtr = std::shared_ptr<const SmoothMap>;

MapPtr identity_map(ManifoldPtr manifold);

// Ambient rotation x -> R x; R must preserve the manifold (plane rotations of
// a sphere's ambient space, block rotations for torus and products).
MapPtr rotation_map(ManifoldPtr manifold, Matrix rotation);
MapPtr plane_rotation_map(ManifoldPtr manifold, int axis_i, int axis_j, double angle);

// Ambient reflection negating one coordinate; orientation reversing.
MapPtr reflection_map(ManifoldPtr manifold, int axis);

// Moebius transformation of R^d conjugated by stereographic projection from
// the last-axis pole; conformal on the sphere.
MapPtr sphere_moebius_map(ManifoldPtr sphere, MoebiusTransform mu);

// In stereographic coordinates w -> w |w/r|^{s-1}; fixes both poles and has
// dilatation s everywhere off the poles.
MapPtr radial_stretch_map(ManifoldPtr sphere, double exponent, int pole_axis = -1);

// Factor-wise map on a product manifold.
MapPtr product_map(ManifoldPtr product, MapPtr first, MapPtr second);

// composition([a, b]) applies b first: x -> a(b(x)).
MapPtr compose_maps(std::vector<MapPtr> maps);

// Catalog expressions: `id`, `stretch:s=1.5[,axis=k]`, `rot:axis=z,angle=0.7`,
// `rot:plane=01,angle=0.7`, `refl:axis=0`, `mob:inv,c=0,r=1`,
// `compose(a,b,...)`, `prod(a,b)`.
MapPtr parse_map(const std::string& expr, ManifoldPtr manifold);

}  // namespace qcpl
