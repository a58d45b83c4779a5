#include "berkskel/modify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "berkskel/errors.hpp"

namespace berkskel {

std::string to_string(CenterKind kind)
{
    return kind == CenterKind::Stratum ? "stratum" : "point";
}

namespace {

ComponentId fresh_component_id(const SncdModel& model)
{
    for (std::size_t k = 1;; ++k) {
        ComponentId id = "exc" + std::to_string(k);
        if (!model.has_component(id))
            return id;
    }
}

/// Hands out stratum ids derived from vertex lists, avoiding collisions with
/// the old model and with each other.
class IdAllocator
{
public:
    explicit IdAllocator(const SncdModel& model)
    {
        for (const auto& s : model.strata())
            taken_.insert(s.id);
    }

    StratumId next(const std::vector<ComponentId>& vertices)
    {
        std::string base;
        if (vertices.size() == 1) {
            base = "v_" + vertices.front();
        } else {
            for (const auto& v : vertices)
                base += (base.empty() ? "" : "-") + v;
        }
        std::string id = base;
        for (int k = 2; taken_.contains(id); ++k)
            id = base + "#" + std::to_string(k);
        taken_.insert(id);
        return id;
    }

private:
    std::set<StratumId> taken_;
};

void extend_pullback(BlowupTrace& trace, const ComponentId& e, const std::vector<ComponentId>& J)
{
    for (auto& [c, row] : trace.pullback) {
        std::int64_t k = 0;
        for (const auto& j : J) {
            const auto it = row.find(j);
            if (it != row.end())
                k += it->second;
        }
        if (k != 0)
            row[e] = k;
    }
}

std::int64_t sum_over(const std::vector<Exponent>& exps, const std::vector<std::size_t>& positions,
                      std::int64_t shift, std::vector<Exponent>* transformed,
                      const std::vector<std::size_t>& kept)
{
    std::int64_t best = 0;
    bool first = true;
    for (const auto& beta : exps) {
        std::int64_t s = shift;
        for (auto p : positions)
            s += beta[p];
        if (first || s < best)
            best = s;
        first = false;
        if (transformed) {
            Exponent out{s};
            for (auto p : kept)
                out.push_back(beta[p]);
            transformed->push_back(std::move(out));
        }
    }
    return best;
}

std::vector<std::size_t> positions_of(const Stratum& s, const std::vector<ComponentId>& vs)
{
    std::vector<std::size_t> out;
    for (const auto& v : vs) {
        const auto it = std::find(s.vertices.begin(), s.vertices.end(), v);
        out.push_back(static_cast<std::size_t>(it - s.vertices.begin()));
    }
    return out;
}

}  // namespace

BlowupTrace identity_trace(const SncdModel& model)
{
    BlowupTrace trace;
    for (const auto& c : model.components())
        trace.pullback[c.id][c.id] = 1;
    return trace;
}

BlowupTrace compose(const BlowupTrace& first, const BlowupTrace& second)
{
    BlowupTrace out;
    out.steps = first.steps;
    out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
    for (const auto& [c, row] : first.pullback) {
        auto& target = out.pullback[c];
        for (const auto& [g, k] : row) {
            const auto it = second.pullback.find(g);
            if (it == second.pullback.end())
                throw DomainError("cannot compose traces: '" + g +
                                  "' is not a base component of the second trace");
            for (const auto& [f, l] : it->second)
                target[f] += k * l;
        }
        std::erase_if(target, [](const auto& kv) { return kv.second == 0; });
    }
    return out;
}

BlowupResult subdivide_stratum(const SncdModel& model, const StratumId& center)
{
    const Stratum& T = model.stratum(center);
    const auto& Tv = T.vertices;
    const std::size_t r = Tv.size();
    if (r < 2)
        throw DomainError("stratum '" + center + "' is a divisor; blowing it up changes nothing");
    const std::int64_t m = model.m();

    const ComponentId e = fresh_component_id(model);
    std::int64_t N_e = 0;
    std::int64_t mu_e = 0;
    for (const auto& j : Tv) {
        N_e += model.component(j).N;
        mu_e += model.component(j).mu;
    }
    if (T.horizontal) {
        // mu_e - m = v_e(h) + m (r - 1), where v_e(z^beta) = sum_j beta_j.
        std::vector<std::size_t> all(r);
        for (std::size_t j = 0; j < r; ++j)
            all[j] = j;
        const auto vnum = sum_over(T.horizontal->num.exponents, all, 0, nullptr, {});
        const auto vden = sum_over(T.horizontal->den.exponents, all, 0, nullptr, {});
        mu_e = vnum - vden + m * static_cast<std::int64_t>(r);
    }

    const auto star_ids = star(model, center);
    std::vector<const Stratum*> star_strata;
    for (const auto& s : model.strata())
        if (star_ids.contains(s.id))
            star_strata.push_back(&s);

    BlowupStep step;
    step.kind = CenterKind::Stratum;
    step.center_stratum = center;
    step.center_vertices = Tv;
    step.codim = static_cast<std::int64_t>(r);
    step.new_vertex = e;
    for (const auto* g : star_strata)
        step.removed.push_back({g->id, g->vertices});

    // New strata are indexed by (G in star, nonempty K subset of Tv).
    IdAllocator ids(model);
    std::map<std::pair<StratumId, std::uint32_t>, StratumId> index;
    struct Pending
    {
        const Stratum* over;
        std::uint32_t mask;
        std::vector<ComponentId> vertices;
    };
    std::vector<Pending> pending;
    for (const auto* g : star_strata) {
        for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
            std::vector<ComponentId> vs{e};
            for (const auto& v : g->vertices) {
                const auto pos = std::find(Tv.begin(), Tv.end(), v) - Tv.begin();
                if (static_cast<std::size_t>(pos) < r && (mask & (1u << pos)))
                    continue;
                vs.push_back(v);
            }
            index[{g->id, mask}] = ids.next(vs);
            pending.push_back({g, mask, std::move(vs)});
        }
    }

    std::vector<Stratum> strata;
    for (const auto& s : model.strata())
        if (!star_ids.contains(s.id))
            strata.push_back(s);

    for (const auto& p : pending) {
        const Stratum& G = *p.over;
        Stratum s;
        s.id = index.at({G.id, p.mask});
        s.vertices = p.vertices;
        s.touches_zero = G.touches_zero;
        s.touches_pole = G.touches_pole;

        std::vector<ComponentId> dropped;
        for (std::size_t i = 0; i < r; ++i)
            if (p.mask & (1u << i))
                dropped.push_back(Tv[i]);

        if (s.vertices.size() > 1) {
            std::vector<ComponentId> rest(s.vertices.begin() + 1, s.vertices.end());
            s.faces.emplace(e, face(model, G.id, rest));
            for (const auto& v : rest) {
                const auto pos = static_cast<std::size_t>(std::find(Tv.begin(), Tv.end(), v) - Tv.begin());
                if (pos < r) {
                    s.faces.emplace(v, index.at({G.id, p.mask | (1u << pos)}));
                } else {
                    std::vector<ComponentId> keep;
                    for (const auto& w : G.vertices)
                        if (w != v)
                            keep.push_back(w);
                    s.faces.emplace(v, index.at({face(model, G.id, keep), p.mask}));
                }
            }
        }

        if (G.horizontal) {
            const auto center_pos = positions_of(G, Tv);
            const auto kept_pos = positions_of(G, {s.vertices.begin() + 1, s.vertices.end()});
            std::vector<Exponent> num, den;
            sum_over(G.horizontal->num.exponents, center_pos, m * static_cast<std::int64_t>(r - 1),
                     &num, kept_pos);
            sum_over(G.horizontal->den.exponents, center_pos, 0, &den, kept_pos);
            s.horizontal = SeriesPair{reduce_support({s.id, std::move(num)}),
                                      reduce_support({s.id, std::move(den)})};
        }

        step.created.push_back({s.id, s.vertices, G.id, std::move(dropped)});
        strata.push_back(std::move(s));
    }

    auto components = model.components();
    components.push_back({e, "exceptional over " + center, N_e, mu_e});

    BlowupTrace trace = identity_trace(model);
    extend_pullback(trace, e, Tv);
    trace.steps.push_back(std::move(step));

    return BlowupResult{SncdModel(model.kind(), m, model.ambient_dim(), std::move(components),
                                  std::move(strata)),
                        e, std::move(trace)};
}

BlowupResult blowup_stratum(const SncdModel& model, const StratumId& stratum)
{
    if (!is_maximal(model, stratum))
        throw UnsupportedError("stratum '" + stratum +
                               "' is not maximal; only maximal centers are supported");
    return subdivide_stratum(model, stratum);
}

BlowupResult blowup_point(const SncdModel& model, const StratumId& stratum,
                          const std::vector<ComponentId>& J, std::int64_t codim)
{
    const Stratum& S = model.stratum(stratum);
    if (J.empty())
        throw DomainError("the center must lie on at least one component");
    const std::set<ComponentId> Jset(J.begin(), J.end());
    if (Jset.size() != J.size())
        throw DomainError("repeated component in J");
    for (const auto& j : J)
        if (std::find(S.vertices.begin(), S.vertices.end(), j) == S.vertices.end())
            throw DomainError("'" + j + "' is not a vertex of stratum '" + stratum + "'");
    const auto size = static_cast<std::int64_t>(J.size());
    if (codim < size || codim > model.ambient_dim())
        throw DomainError("codimension " + std::to_string(codim) + " outside [" +
                          std::to_string(size) + ", " + std::to_string(model.ambient_dim()) + "]");
    if (!is_maximal(model, stratum))
        throw UnsupportedError("stratum '" + stratum + "' is not maximal");
    if (codim == size) {
        if (Jset != std::set<ComponentId>(S.vertices.begin(), S.vertices.end()))
            throw UnsupportedError("a center of codimension |J| is the stratum of J, which is "
                                   "not maximal here");
        return blowup_stratum(model, stratum);
    }

    // Keep J in the stratum's vertex order.
    std::vector<ComponentId> Jord;
    for (const auto& v : S.vertices)
        if (Jset.contains(v))
            Jord.push_back(v);

    const std::int64_t m = model.m();
    const ComponentId e = fresh_component_id(model);
    std::int64_t N_e = 0;
    std::int64_t mu_e = m * (codim - size);
    for (const auto& j : Jord) {
        N_e += model.component(j).N;
        mu_e += model.component(j).mu;
    }

    BlowupStep step;
    step.kind = CenterKind::Point;
    step.center_stratum = stratum;
    step.center_vertices = Jord;
    step.codim = codim;
    step.new_vertex = e;

    IdAllocator ids(model);
    const std::size_t k = Jord.size();
    std::map<std::uint32_t, StratumId> index;
    std::vector<std::pair<std::uint32_t, std::vector<ComponentId>>> pending;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<ComponentId> vs{e};
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i))
                vs.push_back(Jord[i]);
        index[mask] = ids.next(vs);
        pending.emplace_back(mask, std::move(vs));
    }
    // Singleton first, then by size.
    std::stable_sort(pending.begin(), pending.end(),
                     [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });

    std::vector<Stratum> strata = model.strata();
    for (const auto& [mask, vs] : pending) {
        Stratum s;
        s.id = index.at(mask);
        s.vertices = vs;
        s.touches_zero = S.touches_zero;
        s.touches_pole = S.touches_pole;
        std::vector<ComponentId> dropped;
        if (vs.size() > 1) {
            std::vector<ComponentId> rest(vs.begin() + 1, vs.end());
            s.faces.emplace(e, face(model, stratum, rest));
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (1u << i))
                s.faces.emplace(Jord[i], index.at(mask & ~(1u << i)));
            else
                dropped.push_back(Jord[i]);
        }
        step.created.push_back({s.id, s.vertices, stratum, std::move(dropped)});
        strata.push_back(std::move(s));
    }

    auto components = model.components();
    components.push_back({e, "exceptional over a codim " + std::to_string(codim) + " center in " +
                                 stratum,
                          N_e, mu_e});

    BlowupTrace trace = identity_trace(model);
    extend_pullback(trace, e, Jord);
    trace.steps.push_back(std::move(step));

    return BlowupResult{SncdModel(model.kind(), m, model.ambient_dim(), std::move(components),
                                  std::move(strata)),
                        e, std::move(trace)};
}

SkeletonPoint transfer_point(const SncdModel& model, const SncdModel& blown_up,
                             const BlowupTrace& trace, const SkeletonPoint& x)
{
    std::set<ComponentId> base;
    for (const auto& c : model.components())
        base.insert(c.id);
    std::set<ComponentId> traced;
    for (const auto& [c, row] : trace.pullback) {
        traced.insert(c);
        for (const auto& [f, k] : row)
            if (!blown_up.has_component(f))
                throw DomainError("trace/model mismatch: '" + f + "' is not in the target model");
    }
    if (base != traced)
        throw DomainError("trace/model mismatch: base components differ");

    SkeletonPoint cur = make_point(model, x.stratum, x.alpha);
    std::vector<ComponentId> verts = model.stratum(cur.stratum).vertices;

    for (const auto& step : trace.steps) {
        if (step.kind == CenterKind::Point)
            continue;
        const auto hit = std::find_if(step.removed.begin(), step.removed.end(),
                                      [&](const StratumRecord& r) { return r.id == cur.stratum; });
        if (hit == step.removed.end())
            continue;
        if (hit->vertices != verts)
            throw DomainError("trace/model mismatch at stratum '" + cur.stratum + "'");

        std::map<ComponentId, Rational> coords;
        for (std::size_t j = 0; j < verts.size(); ++j)
            coords.emplace(verts[j], cur.alpha[j]);
        Rational a = coords.at(step.center_vertices.front());
        for (const auto& j : step.center_vertices)
            a = std::min(a, coords.at(j));
        std::set<ComponentId> dropped;
        for (const auto& j : step.center_vertices) {
            coords.at(j) -= a;
            if (coords.at(j) == 0) {
                coords.erase(j);
                dropped.insert(j);
            }
        }
        coords.emplace(step.new_vertex, a);

        const auto target = std::find_if(
            step.created.begin(), step.created.end(), [&](const CreatedStratum& c) {
                return c.over == cur.stratum &&
                       std::set<ComponentId>(c.dropped.begin(), c.dropped.end()) == dropped;
            });
        if (target == step.created.end())
            throw DomainError("trace is missing the stratum over '" + cur.stratum + "'");
        SkeletonPoint next{target->id, {}};
        for (const auto& v : target->vertices)
            next.alpha.push_back(coords.at(v));
        cur = std::move(next);
        verts = target->vertices;
    }

    if (!blown_up.has_stratum(cur.stratum) || blown_up.stratum(cur.stratum).vertices != verts)
        throw DomainError("trace/model mismatch: stratum '" + cur.stratum +
                          "' does not match the target model");
    return make_point(blown_up, cur.stratum, std::move(cur.alpha));
}

Rational pulled_back_value(const SncdModel& blown_up, const BlowupTrace& trace,
                           const SkeletonPoint& x, const ComponentId& original)
{
    const auto it = trace.pullback.find(original);
    if (it == trace.pullback.end())
        throw DomainError("'" + original + "' is not a base component of the trace");
    Rational out = 0;
    for (const auto& [f, k] : it->second)
        out += value_on_component(blown_up, x, f) * k;
    return out;
}

ReductionResult reduce_to_divisorial(const SncdModel& model, const SkeletonPoint& x)
{
    ReductionResult out{model, {}, identity_trace(model), {make_point(model, x.stratum, x.alpha)}, {}};

    // Each step lowers sum_j alpha_j L by at least one.
    Integer L = 1;
    for (const auto& a : x.alpha)
        L = boost::multiprecision::lcm(L, boost::multiprecision::denominator(a));
    Rational budget = 0;
    for (const auto& a : x.alpha)
        budget += a * L;

    while (out.path.back().alpha.size() > 1) {
        const SkeletonPoint& cur = out.path.back();
        const auto& verts = out.model.stratum(cur.stratum).vertices;
        std::size_t pivot = 0;
        for (std::size_t j = 1; j < verts.size(); ++j)
            if (cur.alpha[j] < cur.alpha[pivot] ||
                (cur.alpha[j] == cur.alpha[pivot] && verts[j] < verts[pivot]))
                pivot = j;
        out.pivots.push_back(verts[pivot]);

        BlowupResult step = subdivide_stratum(out.model, cur.stratum);
        SkeletonPoint next = transfer_point(out.model, step.model, step.trace, cur);
        out.trace = compose(out.trace, step.trace);
        out.model = std::move(step.model);
        out.path.push_back(std::move(next));
        if (Rational(out.pivots.size()) > budget)
            throw std::logic_error("reduction exceeded its step bound");
    }
    out.vertex = out.model.stratum(out.path.back().stratum).vertices.front();
    return out;
}

}  // namespace berkskel
