#ifndef BERKSKEL_ESSENTIAL_HPP
#define BERKSKEL_ESSENTIAL_HPP

#include <map>
#include <set>
#include <span>

#include "berkskel/model.hpp"
#include "berkskel/rational.hpp"

namespace berkskel {

/// Multiplicity data of one pluricanonical form on a fixed dual complex.
/// Missing flag entries read as false.
struct FormData
{
    std::int64_t m = 1;
    std::map<ComponentId, std::int64_t> mu;
    std::map<StratumId, bool> touches_zero;
    std::map<StratumId, bool> touches_pole;

    bool operator==(const FormData&) const = default;
};

/// The form carried by the model itself.
FormData model_form(const SncdModel& model);

/// Throws DomainError if `form` does not fit the model (missing mu, unknown
/// ids, non-monotone flags).
void check_form(const SncdModel& model, const FormData& form);

/// A face-closed set of strata.
class Subcomplex
{
public:
    Subcomplex() = default;

    /// DomainError if some face of a member is missing.
    static Subcomplex make(const SncdModel& model, std::set<StratumId> strata);

    const std::set<StratumId>& strata() const { return strata_; }
    bool empty() const { return strata_.empty(); }
    bool contains(const StratumId& id) const { return strata_.contains(id); }

    bool operator==(const Subcomplex&) const = default;

private:
    explicit Subcomplex(std::set<StratumId> strata) : strata_(std::move(strata)) {}
    std::set<StratumId> strata_;
};

/// min_i mu_i / N_i; UnsupportedError if the form has poles.
Rational min_weight(const SncdModel& model);
Rational min_weight(const SncdModel& model, const FormData& form);

/// Strata avoiding the zero locus whose vertices all attain min_weight.
Subcomplex ks_skeleton(const SncdModel& model);
Subcomplex ks_skeleton(const SncdModel& model, const FormData& form);

/// Union of ks_skeleton over the forms; DomainError for an empty list.
Subcomplex essential_skeleton(const SncdModel& model, std::span<const FormData> forms);

struct Connectivity
{
    bool connected = false;
    bool empty = true;
    std::size_t blocks = 0;
};

Connectivity is_connected(const SncdModel& model, const Subcomplex& sub);

}  // namespace berkskel

#endif
