#include "berkskel/skeleton.hpp"

#include "berkskel/errors.hpp"

namespace berkskel {

std::string to_string(FaceShape shape)
{
    switch (shape) {
    case FaceShape::Affine:
        return "affine";
    case FaceShape::Concave:
        return "concave";
    case FaceShape::Convex:
        return "convex";
    case FaceShape::Unknown:
        break;
    }
    return "unknown";
}

namespace {

const Stratum& checked_stratum(const SncdModel& model, const StratumId& id, std::size_t size)
{
    const auto& s = model.stratum(id);
    if (s.vertices.size() != size)
        throw DomainError("stratum '" + id + "' has " + std::to_string(s.vertices.size()) +
                          " vertices but " + std::to_string(size) + " coordinates were given");
    return s;
}

Rational normalization(const SncdModel& model, const Stratum& s, const std::vector<Rational>& a)
{
    Rational total = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        total += a[j] * model.component(s.vertices[j]).N;
    return total;
}

}  // namespace

SkeletonPoint make_point(const SncdModel& model, const StratumId& stratum,
                         std::vector<Rational> alpha)
{
    const auto& s = checked_stratum(model, stratum, alpha.size());
    for (const auto& a : alpha)
        if (a <= 0)
            throw DomainError("skeleton point coordinates must be positive, got " + to_string(a));
    const Rational total = normalization(model, s, alpha);
    if (total != 1)
        throw DomainError("normalization violated: sum alpha*N = " + to_string(total));
    return SkeletonPoint{stratum, std::move(alpha)};
}

SkeletonPoint rehome(const SncdModel& model, const StratumId& stratum,
                     const std::vector<Rational>& alpha)
{
    const auto& s = checked_stratum(model, stratum, alpha.size());
    std::vector<ComponentId> keep;
    std::vector<Rational> kept;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] < 0)
            throw DomainError("negative coordinate " + to_string(alpha[j]));
        if (alpha[j] > 0) {
            keep.push_back(s.vertices[j]);
            kept.push_back(alpha[j]);
        }
    }
    if (keep.empty())
        throw DomainError("all coordinates vanish");
    if (keep.size() == alpha.size())
        return make_point(model, stratum, alpha);
    const StratumId target = face(model, stratum, keep);
    // The face may list its vertices in another order.
    const auto& t = model.stratum(target);
    std::vector<Rational> ordered(t.vertices.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        ordered[model.vertex_position(target, keep[i])] = kept[i];
    return make_point(model, target, std::move(ordered));
}

SkeletonPoint vertex_point(const SncdModel& model, const ComponentId& component)
{
    const auto& s = vertex_stratum(model, component);
    return make_point(model, s.id, {Rational(1, model.component(component).N)});
}

SkeletonPoint embed(const SncdModel& model, const BarycentricPoint& p)
{
    const auto& s = checked_stratum(model, p.stratum, p.w.size());
    Rational total = 0;
    std::vector<Rational> alpha;
    alpha.reserve(p.w.size());
    for (std::size_t j = 0; j < p.w.size(); ++j) {
        if (p.w[j] <= 0)
            throw DomainError("barycentric coordinates must be positive");
        total += p.w[j];
        alpha.push_back(p.w[j] / model.component(s.vertices[j]).N);
    }
    if (total != 1)
        throw DomainError("barycentric coordinates sum to " + to_string(total));
    return SkeletonPoint{p.stratum, std::move(alpha)};
}

BarycentricPoint barycentric(const SncdModel& model, const SkeletonPoint& x)
{
    const auto& s = checked_stratum(model, x.stratum, x.alpha.size());
    BarycentricPoint out{x.stratum, {}};
    out.w.reserve(x.alpha.size());
    for (std::size_t j = 0; j < x.alpha.size(); ++j)
        out.w.push_back(x.alpha[j] * model.component(s.vertices[j]).N);
    return out;
}

PointSpec to_spec(const SkeletonPoint& x)
{
    return PointSpec{x.stratum, x.alpha};
}

SkeletonPoint retract(const SncdModel& model, const PointSpec& spec)
{
    const auto& s = checked_stratum(model, spec.center, spec.values.size());
    for (const auto& v : spec.values)
        if (v < 0)
            throw DomainError("component values must be nonnegative");
    const Rational total = normalization(model, s, spec.values);
    if (total != 1)
        throw DomainError("normalization violated: sum v*N = " + to_string(total));
    return rehome(model, spec.center, spec.values);
}

Rational weight(const SncdModel& model, const SkeletonPoint& x)
{
    const auto& s = checked_stratum(model, x.stratum, x.alpha.size());
    if (s.horizontal) {
        Rational total = 0;
        for (const auto& a : x.alpha)
            total += a;
        return val(*s.horizontal, AlphaVector{s.id, x.alpha}) + total * model.m();
    }
    Rational out = 0;
    for (std::size_t j = 0; j < x.alpha.size(); ++j)
        out += x.alpha[j] * model.component(s.vertices[j]).mu;
    return out;
}

Rational value_on_component(const SncdModel& model, const SkeletonPoint& x,
                            const ComponentId& component)
{
    model.component(component);
    const auto& s = checked_stratum(model, x.stratum, x.alpha.size());
    for (std::size_t j = 0; j < s.vertices.size(); ++j)
        if (s.vertices[j] == component)
            return x.alpha[j];
    return 0;
}

FaceShape classify_face(const SncdModel& model, const StratumId& stratum)
{
    const auto& s = model.stratum(stratum);
    if (!s.touches_zero && !s.touches_pole)
        return FaceShape::Affine;
    if (!s.touches_pole)
        return FaceShape::Concave;
    if (!s.touches_zero)
        return FaceShape::Convex;
    return FaceShape::Unknown;
}

}  // namespace berkskel
