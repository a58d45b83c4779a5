#include "berkskel/birational.hpp"

#include "berkskel/errors.hpp"

namespace berkskel {

namespace {

void require_log_resolution(const SncdModel& model)
{
    if (model.kind() != ModelKind::LogResolution)
        throw DomainError("expected a log-resolution model");
}

const Stratum& checked(const SncdModel& model, const QuasiMonomialPoint& x)
{
    const auto& s = model.stratum(x.stratum);
    if (s.vertices.size() != x.alpha.size())
        throw DomainError("stratum '" + x.stratum + "' has " + std::to_string(s.vertices.size()) +
                          " vertices but " + std::to_string(x.alpha.size()) +
                          " weights were given");
    bool positive = false;
    for (const auto& a : x.alpha) {
        if (a < 0)
            throw DomainError("quasi-monomial weights must be nonnegative");
        positive = positive || a > 0;
    }
    if (!positive)
        throw DomainError("quasi-monomial weights vanish identically");
    return s;
}

}  // namespace

Rational lct(const SncdModel& model)
{
    require_log_resolution(model);
    if (model.components().empty())
        throw DomainError("model has no components");
    const auto& first = model.components().front();
    Rational best(first.mu, first.N);
    for (const auto& c : model.components())
        best = std::min(best, Rational(c.mu, c.N));
    return best;
}

Rational log_discrepancy(const SncdModel& model, const QuasiMonomialPoint& x)
{
    const auto& s = checked(model, x);
    Rational out = 0;
    for (std::size_t j = 0; j < x.alpha.size(); ++j)
        out += x.alpha[j] * model.component(s.vertices[j]).mu;
    return out;
}

Rational intersection_order(const SncdModel& model, const QuasiMonomialPoint& x)
{
    const auto& s = checked(model, x);
    Rational out = 0;
    for (std::size_t j = 0; j < x.alpha.size(); ++j)
        out += x.alpha[j] * model.component(s.vertices[j]).N;
    return out;
}

Rational weight_qm(const SncdModel& model, const QuasiMonomialPoint& x)
{
    return log_discrepancy(model, x) / intersection_order(model, x);
}

Subcomplex sk_pair(const SncdModel& model)
{
    const Rational threshold = lct(model);
    std::set<StratumId> out;
    for (const auto& s : model.strata()) {
        bool essential = true;
        for (const auto& v : s.vertices) {
            const auto& c = model.component(v);
            essential = essential && Rational(c.mu, c.N) == threshold;
        }
        if (essential)
            out.insert(s.id);
    }
    return Subcomplex::make(model, std::move(out));
}

std::vector<ConnectednessEntry> connectedness_report(const SncdModel& model)
{
    const auto essential = sk_pair(model);
    std::set<StratumId> all;
    for (const auto& s : model.strata())
        all.insert(s.id);

    std::vector<ConnectednessEntry> out;
    for (auto& block : connected_components(model, all)) {
        ConnectednessEntry entry;
        for (const auto& id : block)
            if (essential.contains(id))
                entry.essential.insert(id);
        entry.connected = !entry.essential.empty() &&
                          connected_components(model, entry.essential).size() == 1;
        entry.component = std::move(block);
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace berkskel
