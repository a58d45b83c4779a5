#include "berkskel/model.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "berkskel/errors.hpp"

namespace berkskel {

SncdModel::SncdModel(ModelKind kind, std::int64_t m, std::int64_t ambient_dim,
                     std::vector<PrimeComponent> components, std::vector<Stratum> strata)
    : kind_(kind),
      m_(m),
      ambient_dim_(ambient_dim),
      components_(std::move(components)),
      strata_(std::move(strata))
{
    // First occurrence wins; duplicates are reported by validate().
    for (std::size_t i = 0; i < components_.size(); ++i)
        component_index_.emplace(components_[i].id, i);
    for (std::size_t i = 0; i < strata_.size(); ++i)
        stratum_index_.emplace(strata_[i].id, i);
}

const PrimeComponent& SncdModel::component(const ComponentId& id) const
{
    const auto it = component_index_.find(id);
    if (it == component_index_.end())
        throw DomainError("unknown component '" + id + "'");
    return components_[it->second];
}

const Stratum& SncdModel::stratum(const StratumId& id) const
{
    const auto it = stratum_index_.find(id);
    if (it == stratum_index_.end())
        throw DomainError("unknown stratum '" + id + "'");
    return strata_[it->second];
}

std::size_t SncdModel::vertex_position(const StratumId& id, const ComponentId& vertex) const
{
    const auto& vs = stratum(id).vertices;
    const auto it = std::find(vs.begin(), vs.end(), vertex);
    if (it == vs.end())
        throw DomainError("component '" + vertex + "' is not a vertex of stratum '" + id + "'");
    return static_cast<std::size_t>(it - vs.begin());
}

std::vector<StratumId> SncdModel::sorted_stratum_ids() const
{
    std::vector<StratumId> ids;
    ids.reserve(strata_.size());
    for (const auto& s : strata_)
        ids.push_back(s.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

bool SncdModel::operator==(const SncdModel& other) const
{
    return kind_ == other.kind_ && m_ == other.m_ && ambient_dim_ == other.ambient_dim_ &&
           components_ == other.components_ && strata_ == other.strata_;
}

std::string to_string(ModelKind kind)
{
    return kind == ModelKind::SncdOverDvr ? "sncd-over-dvr" : "log-resolution";
}

ModelKind parse_model_kind(const std::string& text)
{
    if (text == "sncd-over-dvr")
        return ModelKind::SncdOverDvr;
    if (text == "log-resolution")
        return ModelKind::LogResolution;
    throw DomainError("unknown model kind '" + text + "'");
}

namespace {

std::set<ComponentId> as_set(const std::vector<ComponentId>& v)
{
    return {v.begin(), v.end()};
}

std::vector<Exponent> project(const std::vector<Exponent>& exps,
                              const std::vector<std::size_t>& positions)
{
    std::vector<Exponent> out;
    out.reserve(exps.size());
    for (const auto& beta : exps) {
        Exponent p;
        p.reserve(positions.size());
        for (auto pos : positions)
            p.push_back(beta[pos]);
        out.push_back(std::move(p));
    }
    return out;
}

class Validator
{
public:
    explicit Validator(const SncdModel& model) : model_(model) {}

    std::vector<Violation> run()
    {
        check_header();
        check_components();
        check_strata_shape();
        check_faces();
        check_simplicial_identity();
        check_flags();
        check_vertex_strata();
        check_horizontal();
        return std::move(out_);
    }

private:
    void report(std::string code, std::string detail)
    {
        out_.push_back({std::move(code), std::move(detail)});
    }

    void check_header()
    {
        if (model_.m() < 1)
            report("bad degree", "m = " + std::to_string(model_.m()) + " must be positive");
        if (model_.ambient_dim() < 1)
            report("bad dimension", "ambient_dim must be positive");
        if (model_.kind() == ModelKind::LogResolution && model_.m() != 1)
            report("bad degree", "log-resolution models use m = 1");
    }

    void check_components()
    {
        std::set<ComponentId> seen;
        for (const auto& c : model_.components()) {
            if (!seen.insert(c.id).second)
                report("duplicate id", "component '" + c.id + "' declared twice");
            if (c.N < 1)
                report("bad multiplicity",
                       "component '" + c.id + "' has N = " + std::to_string(c.N));
        }
    }

    void check_strata_shape()
    {
        std::set<StratumId> seen;
        for (const auto& s : model_.strata()) {
            if (!seen.insert(s.id).second)
                report("duplicate id", "stratum '" + s.id + "' declared twice");
            bool ok = true;
            if (s.vertices.empty()) {
                report("empty stratum", "stratum '" + s.id + "' has no vertices");
                ok = false;
            }
            if (as_set(s.vertices).size() != s.vertices.size()) {
                report("repeated vertex", "stratum '" + s.id + "' repeats a vertex");
                ok = false;
            }
            for (const auto& v : s.vertices) {
                if (!model_.has_component(v)) {
                    report("unknown component",
                           "stratum '" + s.id + "' references '" + v + "'");
                    ok = false;
                }
            }
            if (static_cast<std::int64_t>(s.vertices.size()) > model_.ambient_dim())
                report("codimension bound", "stratum '" + s.id + "' has " +
                                                std::to_string(s.vertices.size()) +
                                                " vertices > ambient_dim");
            if (ok)
                shaped_.insert(s.id);
        }
    }

    void check_faces()
    {
        for (const auto& s : model_.strata()) {
            if (!shaped_.contains(s.id))
                continue;
            const auto verts = as_set(s.vertices);
            bool ok = true;
            for (const auto& [j, target] : s.faces) {
                if (!verts.contains(j)) {
                    report("face-map mismatch",
                           "stratum '" + s.id + "' has a face for non-vertex '" + j + "'");
                    ok = false;
                }
            }
            if (s.vertices.size() == 1) {
                if (!s.faces.empty()) {
                    report("face-map mismatch", "singleton stratum '" + s.id + "' has faces");
                    ok = false;
                }
                if (ok)
                    faced_.insert(s.id);
                continue;
            }
            for (const auto& j : s.vertices) {
                const auto it = s.faces.find(j);
                if (it == s.faces.end()) {
                    report("missing face",
                           "stratum '" + s.id + "' has no face dropping '" + j + "'");
                    ok = false;
                    continue;
                }
                if (!model_.has_stratum(it->second)) {
                    report("face-map mismatch", "stratum '" + s.id + "' face dropping '" + j +
                                                    "' is unknown stratum '" + it->second +
                                                    "'");
                    ok = false;
                    continue;
                }
                auto expected = verts;
                expected.erase(j);
                if (as_set(model_.stratum(it->second).vertices) != expected) {
                    report("face-map mismatch", "stratum '" + s.id + "' face dropping '" + j +
                                                    "' is '" + it->second +
                                                    "' with the wrong vertex set");
                    ok = false;
                }
            }
            if (ok)
                faced_.insert(s.id);
        }
    }

    bool chain_ok(const StratumId& id) const
    {
        // A face is usable for composition once its own map is well formed.
        return faced_.contains(id);
    }

    void check_simplicial_identity()
    {
        for (const auto& s : model_.strata()) {
            if (!faced_.contains(s.id) || s.vertices.size() < 3)
                continue;
            for (std::size_t a = 0; a < s.vertices.size(); ++a) {
                for (std::size_t b = a + 1; b < s.vertices.size(); ++b) {
                    const auto& ja = s.vertices[a];
                    const auto& jb = s.vertices[b];
                    const auto& fa = s.faces.at(ja);
                    const auto& fb = s.faces.at(jb);
                    if (!chain_ok(fa) || !chain_ok(fb))
                        continue;
                    const auto& via_a = model_.stratum(fa).faces.at(jb);
                    const auto& via_b = model_.stratum(fb).faces.at(ja);
                    if (via_a != via_b)
                        report("simplicial identity",
                               "stratum '" + s.id + "': dropping '" + ja + "' then '" + jb +
                                   "' gives '" + via_a + "', the other order gives '" + via_b +
                                   "'");
                }
            }
        }
    }

    void check_flags()
    {
        for (const auto& s : model_.strata()) {
            if (!faced_.contains(s.id))
                continue;
            for (const auto& [j, target] : s.faces) {
                const auto& f = model_.stratum(target);
                if (!s.touches_zero && f.touches_zero)
                    report("flag monotonicity", "stratum '" + s.id +
                                                    "' avoids the zero locus but its face '" +
                                                    f.id + "' touches it");
                if (!s.touches_pole && f.touches_pole)
                    report("flag monotonicity", "stratum '" + s.id +
                                                    "' avoids the pole locus but its face '" +
                                                    f.id + "' touches it");
            }
        }
    }

    void check_vertex_strata()
    {
        std::set<ComponentId> covered;
        for (const auto& s : model_.strata())
            if (s.vertices.size() == 1)
                covered.insert(s.vertices.front());
        for (const auto& c : model_.components())
            if (!covered.contains(c.id))
                report("missing vertex stratum",
                       "component '" + c.id + "' has no singleton stratum");
    }

    void check_horizontal()
    {
        for (const auto& s : model_.strata()) {
            if (!s.horizontal || !shaped_.contains(s.id))
                continue;
            const auto& h = *s.horizontal;
            try {
                if (h.num.stratum != s.id || h.den.stratum != s.id)
                    throw DomainError("support attached to a different stratum id");
                check_support(h.num, s.vertices.size());
                check_support(h.den, s.vertices.size());
            } catch (const DomainError& e) {
                report("horizontal shape", "stratum '" + s.id + "': " + e.what());
                continue;
            }
            for (std::size_t j = 0; j < s.vertices.size(); ++j) {
                const auto& c = model_.component(s.vertices[j]);
                const std::int64_t got = min_coord(h.num.exponents, j) - min_coord(h.den.exponents, j);
                if (got != c.mu - model_.m())
                    report("horizontal inconsistency",
                           "stratum '" + s.id + "' vertex '" + c.id + "': expansion order " +
                               std::to_string(got) + " but mu - m = " +
                               std::to_string(c.mu - model_.m()));
            }
            if (!faced_.contains(s.id))
                continue;
            for (const auto& [j, target] : s.faces) {
                const auto& f = model_.stratum(target);
                if (!f.horizontal)
                    continue;
                std::vector<std::size_t> positions;
                for (const auto& v : f.vertices)
                    positions.push_back(model_.vertex_position(s.id, v));
                const auto num = reduce_support({f.id, project(h.num.exponents, positions)});
                const auto den = reduce_support({f.id, project(h.den.exponents, positions)});
                if (num.exponents != reduce_support(f.horizontal->num).exponents ||
                    den.exponents != reduce_support(f.horizontal->den).exponents)
                    report("horizontal compatibility",
                           "expansion at face '" + f.id + "' is not the restriction of '" +
                               s.id + "'");
            }
        }
    }

    static std::int64_t min_coord(const std::vector<Exponent>& exps, std::size_t j)
    {
        std::int64_t best = exps.front()[j];
        for (const auto& beta : exps)
            best = std::min(best, beta[j]);
        return best;
    }

    const SncdModel& model_;
    std::vector<Violation> out_;
    std::set<StratumId> shaped_;
    std::set<StratumId> faced_;
};

}  // namespace

std::vector<Violation> validate(const SncdModel& model)
{
    return Validator(model).run();
}

StratumId face(const SncdModel& model, const StratumId& stratum, std::span<const ComponentId> keep)
{
    const auto& s = model.stratum(stratum);
    if (keep.empty())
        throw DomainError("face of '" + stratum + "' requested with an empty vertex set");
    std::set<ComponentId> wanted(keep.begin(), keep.end());
    if (wanted.size() != keep.size())
        throw DomainError("face of '" + stratum + "' requested with repeated vertices");
    for (const auto& v : wanted)
        if (std::find(s.vertices.begin(), s.vertices.end(), v) == s.vertices.end())
            throw DomainError("'" + v + "' is not a vertex of stratum '" + stratum + "'");

    StratumId current = stratum;
    for (const auto& v : s.vertices) {
        if (wanted.contains(v))
            continue;
        const auto& cur = model.stratum(current);
        const auto it = cur.faces.find(v);
        if (it == cur.faces.end())
            throw DomainError("stratum '" + current + "' has no face dropping '" + v + "'");
        current = it->second;
    }
    return current;
}

std::set<StratumId> closed_star_down(const SncdModel& model, const StratumId& stratum)
{
    std::set<StratumId> seen{stratum};
    std::deque<StratumId> queue{stratum};
    while (!queue.empty()) {
        const auto& s = model.stratum(queue.front());
        queue.pop_front();
        for (const auto& [j, f] : s.faces)
            if (seen.insert(f).second)
                queue.push_back(f);
    }
    return seen;
}

std::set<StratumId> star(const SncdModel& model, const StratumId& stratum)
{
    model.stratum(stratum);
    std::set<StratumId> out;
    for (const auto& s : model.strata())
        if (closed_star_down(model, s.id).contains(stratum))
            out.insert(s.id);
    return out;
}

bool is_maximal(const SncdModel& model, const StratumId& stratum)
{
    return star(model, stratum).size() == 1;
}

std::vector<std::set<StratumId>> connected_components(const SncdModel& model,
                                                      const std::set<StratumId>& strata)
{
    std::vector<StratumId> ids(strata.begin(), strata.end());
    std::map<StratumId, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        model.stratum(ids[i]);
        index.emplace(ids[i], i);
    }
    std::vector<std::size_t> parent(ids.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (const auto& f : closed_star_down(model, ids[i])) {
            const auto it = index.find(f);
            if (it == index.end())
                continue;
            const auto a = find(i);
            const auto b = find(it->second);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<std::size_t, std::set<StratumId>> blocks;
    for (std::size_t i = 0; i < ids.size(); ++i)
        blocks[find(i)].insert(ids[i]);
    std::vector<std::set<StratumId>> out;
    for (auto& [root, block] : blocks)
        out.push_back(std::move(block));
    return out;
}

const Stratum& vertex_stratum(const SncdModel& model, const ComponentId& component)
{
    model.component(component);
    for (const auto& s : model.strata())
        if (s.vertices.size() == 1 && s.vertices.front() == component)
            return s;
    throw DomainError("component '" + component + "' has no singleton stratum");
}

SncdModel model_from_facets(ModelKind kind, std::int64_t m, std::int64_t ambient_dim,
                            std::vector<PrimeComponent> components,
                            const std::vector<std::vector<ComponentId>>& facets)
{
    std::map<ComponentId, std::size_t> order;
    for (std::size_t i = 0; i < components.size(); ++i)
        order.emplace(components[i].id, i);
    auto canonical = [&](std::vector<ComponentId> vs) {
        for (const auto& v : vs)
            if (!order.contains(v))
                throw DomainError("facet references unknown component '" + v + "'");
        std::sort(vs.begin(), vs.end(),
                  [&](const auto& a, const auto& b) { return order.at(a) < order.at(b); });
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    };
    auto id_of = [](const std::vector<ComponentId>& vs) {
        if (vs.size() == 1)
            return "v_" + vs.front();
        std::string id;
        for (const auto& v : vs)
            id += (id.empty() ? "" : "-") + v;
        return id;
    };

    std::set<std::vector<ComponentId>> sets;
    for (const auto& c : components)
        sets.insert({c.id});
    for (const auto& facet : facets) {
        const auto vs = canonical(facet);
        if (vs.size() > 20)
            throw DomainError("facet too large");
        for (std::uint32_t mask = 1; mask < (1u << vs.size()); ++mask) {
            std::vector<ComponentId> sub;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (mask & (1u << i))
                    sub.push_back(vs[i]);
            sets.insert(canonical(sub));
        }
    }
    std::vector<std::vector<ComponentId>> ordered(sets.begin(), sets.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    std::vector<Stratum> strata;
    for (const auto& vs : ordered) {
        Stratum s;
        s.id = id_of(vs);
        s.vertices = vs;
        if (vs.size() > 1) {
            for (const auto& j : vs) {
                std::vector<ComponentId> rest;
                for (const auto& v : vs)
                    if (v != j)
                        rest.push_back(v);
                s.faces.emplace(j, id_of(rest));
            }
        }
        strata.push_back(std::move(s));
    }
    return SncdModel(kind, m, ambient_dim, std::move(components), std::move(strata));
}

}  // namespace berkskel
