#ifndef BERKSKEL_SKELETON_HPP
#define BERKSKEL_SKELETON_HPP

#include <vector>

#include "berkskel/model.hpp"
#include "berkskel/rational.hpp"

namespace berkskel {

/**
 * Monomial point of the Berkovich skeleton in the open face of `stratum`.
 * alpha is aligned with the stratum's vertex order, every coordinate is
 * positive and sum_j alpha_j N_j = 1.
 */
struct SkeletonPoint
{
    StratumId stratum;
    std::vector<Rational> alpha;

    bool operator==(const SkeletonPoint&) const = default;
};

/// Barycentric coordinates w_j = alpha_j N_j: positive, summing to one.
struct BarycentricPoint
{
    StratumId stratum;
    std::vector<Rational> w;

    bool operator==(const BarycentricPoint&) const = default;
};

/// A point given by its reduction and its values on the components through
/// it. values are aligned with center's vertices, nonnegative, and satisfy
/// sum_j values_j N_j = 1.
struct PointSpec
{
    StratumId center;
    std::vector<Rational> values;
};

enum class FaceShape { Affine, Concave, Convex, Unknown };

std::string to_string(FaceShape shape);

/// Checked constructor: positivity and normalization, DomainError otherwise.
SkeletonPoint make_point(const SncdModel& model, const StratumId& stratum,
                         std::vector<Rational> alpha);

/// Like make_point but accepts zero coordinates: the point is re-homed on the
/// face spanned by the positive ones.
SkeletonPoint rehome(const SncdModel& model, const StratumId& stratum,
                     const std::vector<Rational>& alpha);

/// The divisorial point of a component: alpha = 1/N on its singleton stratum.
SkeletonPoint vertex_point(const SncdModel& model, const ComponentId& component);

SkeletonPoint embed(const SncdModel& model, const BarycentricPoint& p);
BarycentricPoint barycentric(const SncdModel& model, const SkeletonPoint& x);

PointSpec to_spec(const SkeletonPoint& x);

/// The skeleton point with the same values on the components through the
/// center. Identity on skeleton points.
SkeletonPoint retract(const SncdModel& model, const PointSpec& spec);

/// v_x(div(omega) + m (X_k)_red). Without an expansion on the stratum this
/// is sum_j alpha_j mu_j; with one it is val(num) - val(den) + m sum_j alpha_j.
Rational weight(const SncdModel& model, const SkeletonPoint& x);

/// v_x(E_c): alpha_c on the stratum, 0 off it.
Rational value_on_component(const SncdModel& model, const SkeletonPoint& x,
                            const ComponentId& component);

/// Shape of the weight function on the closed face of a stratum.
FaceShape classify_face(const SncdModel& model, const StratumId& stratum);

}  // namespace berkskel

#endif
