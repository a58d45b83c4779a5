#include "berkskel/essential.hpp"

#include "berkskel/errors.hpp"

namespace berkskel {

namespace {

bool flag(const std::map<StratumId, bool>& flags, const StratumId& id)
{
    const auto it = flags.find(id);
    return it != flags.end() && it->second;
}

void require_regular(const SncdModel& model, const FormData& form)
{
    check_form(model, form);
    for (const auto& [id, pole] : form.touches_pole)
        if (pole)
            throw UnsupportedError("form has poles along stratum '" + id +
                                   "'; the weight minimum is only computed for regular forms");
}

Rational ratio(const SncdModel& model, const FormData& form, const ComponentId& c)
{
    return Rational(form.mu.at(c), model.component(c).N);
}

}  // namespace

FormData model_form(const SncdModel& model)
{
    FormData form;
    form.m = model.m();
    for (const auto& c : model.components())
        form.mu.emplace(c.id, c.mu);
    for (const auto& s : model.strata()) {
        form.touches_zero.emplace(s.id, s.touches_zero);
        form.touches_pole.emplace(s.id, s.touches_pole);
    }
    return form;
}

void check_form(const SncdModel& model, const FormData& form)
{
    if (form.m < 1)
        throw DomainError("form degree m must be positive");
    for (const auto& c : model.components())
        if (!form.mu.contains(c.id))
            throw DomainError("form has no mu for component '" + c.id + "'");
    for (const auto& [c, mu] : form.mu)
        model.component(c);
    for (const auto* flags : {&form.touches_zero, &form.touches_pole})
        for (const auto& [id, value] : *flags)
            model.stratum(id);
    for (const auto& s : model.strata()) {
        for (const auto& [j, f] : s.faces) {
            if (!flag(form.touches_zero, s.id) && flag(form.touches_zero, f))
                throw DomainError("flag monotonicity: zero locus touches face '" + f +
                                  "' but not '" + s.id + "'");
            if (!flag(form.touches_pole, s.id) && flag(form.touches_pole, f))
                throw DomainError("flag monotonicity: pole locus touches face '" + f +
                                  "' but not '" + s.id + "'");
        }
    }
}

Subcomplex Subcomplex::make(const SncdModel& model, std::set<StratumId> strata)
{
    for (const auto& id : strata)
        for (const auto& [j, f] : model.stratum(id).faces)
            if (!strata.contains(f))
                throw DomainError("not face-closed: '" + id + "' is present but its face '" + f +
                                  "' is not");
    return Subcomplex(std::move(strata));
}

Rational min_weight(const SncdModel& model)
{
    return min_weight(model, model_form(model));
}

Rational min_weight(const SncdModel& model, const FormData& form)
{
    require_regular(model, form);
    if (model.components().empty())
        throw DomainError("model has no components");
    Rational best = ratio(model, form, model.components().front().id);
    for (const auto& c : model.components())
        best = std::min(best, ratio(model, form, c.id));
    return best;
}

Subcomplex ks_skeleton(const SncdModel& model)
{
    return ks_skeleton(model, model_form(model));
}

Subcomplex ks_skeleton(const SncdModel& model, const FormData& form)
{
    const Rational least = min_weight(model, form);
    std::set<StratumId> out;
    for (const auto& s : model.strata()) {
        if (flag(form.touches_zero, s.id))
            continue;
        bool essential = true;
        for (const auto& v : s.vertices)
            essential = essential && ratio(model, form, v) == least;
        if (essential)
            out.insert(s.id);
    }
    return Subcomplex::make(model, std::move(out));
}

Subcomplex essential_skeleton(const SncdModel& model, std::span<const FormData> forms)
{
    if (forms.empty())
        throw DomainError("essential skeleton needs at least one form");
    std::set<StratumId> out;
    for (const auto& form : forms) {
        const auto sk = ks_skeleton(model, form);
        out.insert(sk.strata().begin(), sk.strata().end());
    }
    return Subcomplex::make(model, std::move(out));
}

Connectivity is_connected(const SncdModel& model, const Subcomplex& sub)
{
    Connectivity out;
    out.empty = sub.empty();
    out.blocks = connected_components(model, sub.strata()).size();
    out.connected = out.blocks == 1;
    return out;
}

}  // namespace berkskel
