#ifndef BERKSKEL_MODEL_HPP
#define BERKSKEL_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "berkskel/series.hpp"

namespace berkskel {

using ComponentId = std::string;

/// sncd-over-dvr: N is the multiplicity in the special fiber and mu - m the
/// multiplicity in div(omega). log-resolution: N is the multiplicity in
/// Z(I O_Y), mu - 1 the multiplicity in K_{Y/X}, and m = 1.
enum class ModelKind { SncdOverDvr, LogResolution };

struct PrimeComponent
{
    ComponentId id;
    std::string name;
    std::int64_t N = 1;
    std::int64_t mu = 1;

    bool operator==(const PrimeComponent&) const = default;
};

/**
 * One connected component of an intersection of prime components, i.e. one
 * simplex of the dual complex. A vertex set may carry several strata, so
 * faces are given explicitly: faces[j] is the stratum obtained by dropping
 * vertex j.
 */
struct Stratum
{
    StratumId id;
    std::vector<ComponentId> vertices;
    std::map<ComponentId, StratumId> faces;
    bool touches_zero = false;
    bool touches_pole = false;
    /// Local expansion of the equation of div(omega) at the stratum, in the
    /// coordinates of `vertices`.
    std::optional<SeriesPair> horizontal;

    std::size_t dimension() const { return vertices.size() - 1; }

    bool operator==(const Stratum&) const = default;
};

/// Weighted dual complex of an sncd-model or log resolution. Immutable once
/// built; lookups by id are indexed.
class SncdModel
{
public:
    SncdModel(ModelKind kind, std::int64_t m, std::int64_t ambient_dim,
              std::vector<PrimeComponent> components, std::vector<Stratum> strata);

    ModelKind kind() const { return kind_; }
    std::int64_t m() const { return m_; }
    std::int64_t ambient_dim() const { return ambient_dim_; }
    const std::vector<PrimeComponent>& components() const { return components_; }
    const std::vector<Stratum>& strata() const { return strata_; }

    bool has_component(const ComponentId& id) const { return component_index_.contains(id); }
    bool has_stratum(const StratumId& id) const { return stratum_index_.contains(id); }

    /// Throw DomainError for unknown ids.
    const PrimeComponent& component(const ComponentId& id) const;
    const Stratum& stratum(const StratumId& id) const;

    /// Position of `vertex` in stratum.vertices; DomainError if absent.
    std::size_t vertex_position(const StratumId& stratum, const ComponentId& vertex) const;

    /// Stratum ids sorted lexicographically.
    std::vector<StratumId> sorted_stratum_ids() const;

    bool operator==(const SncdModel& other) const;

private:
    ModelKind kind_;
    std::int64_t m_;
    std::int64_t ambient_dim_;
    std::vector<PrimeComponent> components_;
    std::vector<Stratum> strata_;
    std::unordered_map<ComponentId, std::size_t> component_index_;
    std::unordered_map<StratumId, std::size_t> stratum_index_;
};

std::string to_string(ModelKind kind);
ModelKind parse_model_kind(const std::string& text);

struct Violation
{
    std::string code;    // e.g. "face-map mismatch"
    std::string detail;
};

/// Every violated structural invariant; empty iff the model is valid.
std::vector<Violation> validate(const SncdModel& model);

/// Stratum reached from `stratum` by dropping every vertex not in `keep`.
/// `keep` must be a nonempty subset of the stratum's vertices.
StratumId face(const SncdModel& model, const StratumId& stratum,
               std::span<const ComponentId> keep);

/// The stratum itself and all of its iterated faces, sorted.
std::set<StratumId> closed_star_down(const SncdModel& model, const StratumId& stratum);

/// True if no other stratum has `stratum` among its iterated faces.
bool is_maximal(const SncdModel& model, const StratumId& stratum);

/// Strata having `stratum` as an iterated face, including itself.
std::set<StratumId> star(const SncdModel& model, const StratumId& stratum);

/// Blocks of `strata` under the face relation restricted to `strata`,
/// ordered by their smallest id.
std::vector<std::set<StratumId>> connected_components(const SncdModel& model,
                                                      const std::set<StratumId>& strata);

/// A singleton stratum carrying `component` (the first one in model order).
const Stratum& vertex_stratum(const SncdModel& model, const ComponentId& component);

/**
 * Builds a simplicial model: one stratum per vertex set, generated by the
 * given facets (all subsets are added). Stratum ids are the vertex ids joined
 * with '-', singletons get "v_" + id. Flags default to false.
 */
SncdModel model_from_facets(ModelKind kind, std::int64_t m, std::int64_t ambient_dim,
                            std::vector<PrimeComponent> components,
                            const std::vector<std::vector<ComponentId>>& facets);

}  // namespace berkskel

#endif
