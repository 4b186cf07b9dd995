#pragma once

#include <variant>
#include <vector>

#include "qcpl/geometry.hpp"

namespace qcpl {

// Point of the one point compactification of R^d. Infinity is a tagged value,
// never a large float, so the singular-set logic is exact.
struct RPoint {
    Vector x;
    bool infinite = false;

    static RPoint at_infinity(int d) {
        RPoint p;
        p.x = Vector::Zero(d);
        p.infinite = true;
        return p;
    }
    static RPoint finite(Vector v) {
        RPoint p;
        p.x = std::move(v);
        return p;
    }
    int dim() const { return static_cast<int>(x.size()); }
};

struct MoebiusTranslation {
    Vector offset;
};
struct MoebiusScaling {
    double factor;  // > 0
};
struct MoebiusRotation {
    Matrix matrix;  // orthogonal, det +1
};
struct SphereInversion {
    Vector center;
    double radius;  // > 0
};

using MoebiusGenerator =
    std::variant<MoebiusTranslation, MoebiusScaling, MoebiusRotation, SphereInversion>;

// Word of generators, applied left to right: word[0] acts first.
class MoebiusTransform {
public:
    explicit MoebiusTransform(int dim) : dim_(dim) {}
    MoebiusTransform(int dim, std::vector<MoebiusGenerator> word);

    int dim() const { return dim_; }
    const std::vector<MoebiusGenerator>& word() const { return word_; }

    MoebiusTransform& then_translate(Vector offset);
    MoebiusTransform& then_scale(double factor);
    MoebiusTransform& then_rotate(Matrix rotation);
    MoebiusTransform& then_invert(Vector center, double radius);

    RPoint apply(const RPoint& p) const;
    RPoint apply(const Vector& x) const { return apply(RPoint::finite(x)); }

    MoebiusTransform inverse() const;

    // Preimage of infinity: at most one point of the compactification.
    std::vector<RPoint> singular_points() const;

private:
    int dim_;
    std::vector<MoebiusGenerator> word_;
};

RPoint moebius_apply(const MoebiusTransform& mu, const RPoint& x);

// apply(compose(a, b), x) == apply(a, apply(b, x)).
MoebiusTransform moebius_compose(const MoebiusTransform& a, const MoebiusTransform& b);

}  // namespace qcpl
