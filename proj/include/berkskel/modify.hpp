#ifndef BERKSKEL_MODIFY_HPP
#define BERKSKEL_MODIFY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "berkskel/model.hpp"
#include "berkskel/skeleton.hpp"

namespace berkskel {

enum class CenterKind { Stratum, Point };

std::string to_string(CenterKind kind);

struct StratumRecord
{
    StratumId id;
    std::vector<ComponentId> vertices;

    bool operator==(const StratumRecord&) const = default;
};

/// A stratum added by a blow-up. For stratum centers it lies over the star
/// stratum `over` and misses the center vertices `dropped`.
struct CreatedStratum
{
    StratumId id;
    std::vector<ComponentId> vertices;
    StratumId over;
    std::vector<ComponentId> dropped;

    bool operator==(const CreatedStratum&) const = default;
};

struct BlowupStep
{
    CenterKind kind = CenterKind::Stratum;
    StratumId center_stratum;
    std::vector<ComponentId> center_vertices;
    std::int64_t codim = 0;
    ComponentId new_vertex;
    std::vector<StratumRecord> removed;
    std::vector<CreatedStratum> created;

    bool operator==(const BlowupStep&) const = default;
};

/**
 * A sequence of blow-ups together with the pullback of every original
 * component: pullback[c][f] is the multiplicity of the final component f in
 * the total transform of c.
 */
struct BlowupTrace
{
    std::vector<BlowupStep> steps;
    std::map<ComponentId, std::map<ComponentId, std::int64_t>> pullback;

    bool operator==(const BlowupTrace&) const = default;
};

struct BlowupResult
{
    SncdModel model;
    ComponentId new_vertex;
    BlowupTrace trace;
};

struct ReductionResult
{
    SncdModel model;
    ComponentId vertex;
    BlowupTrace trace;
    /// The input point after each step; back() is the divisorial point.
    std::vector<SkeletonPoint> path;
    /// Vertex of minimal coordinate at each step, ties to the smallest id.
    std::vector<ComponentId> pivots;
};

/// Zero-step trace: every component pulls back to itself.
BlowupTrace identity_trace(const SncdModel& model);

/// `second` applied after `first`.
BlowupTrace compose(const BlowupTrace& first, const BlowupTrace& second);

/**
 * Blow-up of a maximal stratum: stellar subdivision of its face with a new
 * vertex e, N_e = sum N_j, mu_e = sum mu_j (computed from the local expansion
 * when the stratum carries one). Throws UnsupportedError for non-maximal
 * strata and DomainError for singleton strata.
 */
BlowupResult blowup_stratum(const SncdModel& model, const StratumId& stratum);

/// Same as blowup_stratum without the maximality restriction: every stratum
/// in the star of the center is subdivided.
BlowupResult subdivide_stratum(const SncdModel& model, const StratumId& stratum);

/**
 * Blow-up of a smooth codimension-`codim` center lying on exactly the
 * components `J` of the maximal stratum `stratum`, transverse to the snc
 * structure. N_e = sum_{J} N_j, mu_e = sum_{J} mu_j + m (codim - |J|).
 * With codim = |J| this is blowup_stratum.
 */
BlowupResult blowup_point(const SncdModel& model, const StratumId& stratum,
                          const std::vector<ComponentId>& J, std::int64_t codim);

/// The same valuation as a skeleton point of the blown-up model.
SkeletonPoint transfer_point(const SncdModel& model, const SncdModel& blown_up,
                             const BlowupTrace& trace, const SkeletonPoint& x);

/// v_x(h^* E_c) for an original component c, read on the blown-up model.
Rational pulled_back_value(const SncdModel& blown_up, const BlowupTrace& trace,
                           const SkeletonPoint& x, const ComponentId& original);

/// Repeatedly blows up the stratum carrying x until x is a vertex point.
ReductionResult reduce_to_divisorial(const SncdModel& model, const SkeletonPoint& x);

}  // namespace berkskel

#endif
