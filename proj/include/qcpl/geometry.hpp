#pragma once

#include <iosfwd>
#include <string>

#include <Eigen/Dense>

#include "qcpl/errors.hpp"
#include "qcpl/rng.hpp"

namespace qcpl {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Ordered configuration of r points in R^d (repetition allowed), stored as the
// columns of a d x r matrix.
class Configuration {
public:
    explicit Configuration(Matrix points);

    int dim() const { return static_cast<int>(points_.rows()); }
    int count() const { return static_cast<int>(points_.cols()); }
    const Matrix& points() const { return points_; }
    Vector point(int i) const { return points_.col(i); }

    // Max pairwise distance.
    double diameter() const;
    Vector center_of_mass() const { return points_.rowwise().mean(); }
    bool fully_degenerate() const { return diameter() == 0.0; }

private:
    Matrix points_;
};

// CSV round trip: header line `# d=<d> r=<r>`, then one point per line with d
// comma-separated fields.
Configuration load_configuration_csv(std::istream& in);
void save_configuration_csv(std::ostream& out, const Configuration& config);

// Orientation preserving similarity x -> scale * rotation * x + translation.
class Similarity {
public:
    Similarity(double scale, Matrix rotation, Vector translation);

    int dim() const { return static_cast<int>(rotation_.rows()); }
    double scale() const { return scale_; }
    const Matrix& rotation() const { return rotation_; }
    const Vector& translation() const { return translation_; }

    Vector apply(const Vector& x) const { return scale_ * (rotation_ * x) + translation_; }
    Configuration apply(const Configuration& config) const;

    // Random similarity with scale in [0.2, 5] and translation in [-3, 3]^d.
    static Similarity random(int d, Rng& rng);

private:
    double scale_;
    Matrix rotation_;
    Vector translation_;
};

// Random element of SO(d) (QR of a Gaussian matrix, sign-corrected).
Matrix random_rotation(int d, Rng& rng);

// Similarity class of a configuration. The canonical representative has
// center of mass at the origin and unit Frobenius norm.
class Shape {
public:
    Shape(Configuration canonical, double source_diameter);

    const Configuration& canonical() const { return canonical_; }
    double source_diameter() const { return source_diameter_; }
    int dim() const { return canonical_.dim(); }
    int count() const { return canonical_.count(); }
    double canonical_diameter() const { return canonical_.diameter(); }

private:
    Configuration canonical_;
    double source_diameter_;
};

// Canonical representative of the similarity class. Throws FullyDegenerate if
// all points coincide.
Shape shape_of(const Configuration& config);

// Procrustes distance min over R in SO(d) of ||R * a - b||_F between canonical
// representatives. Symmetric; zero iff the shapes agree.
double shape_distance(const Shape& a, const Shape& b);

}  // namespace qcpl
