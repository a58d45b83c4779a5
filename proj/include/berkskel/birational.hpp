#ifndef BERKSKEL_BIRATIONAL_HPP
#define BERKSKEL_BIRATIONAL_HPP

#include <set>
#include <vector>

#include "berkskel/essential.hpp"
#include "berkskel/model.hpp"

namespace berkskel {

/// Quasi-monomial valuation on a log resolution: nonnegative weights on the
/// stratum's vertices, not all zero, with no normalization.
struct QuasiMonomialPoint
{
    StratumId stratum;
    std::vector<Rational> alpha;
};

/// min_i mu_i / N_i over the components of a log-resolution model.
Rational lct(const SncdModel& model);

/// A_X(x) = v_x(K_{Y/X} + Z(I O_Y)_red) = sum_j alpha_j mu_j.
Rational log_discrepancy(const SncdModel& model, const QuasiMonomialPoint& x);

/// N_x(I) = v_x(Z(I O_Y)) = sum_j alpha_j N_j.
Rational intersection_order(const SncdModel& model, const QuasiMonomialPoint& x);

/// A_X(x) / N_x(I); invariant under scaling alpha.
Rational weight_qm(const SncdModel& model, const QuasiMonomialPoint& x);

/// Faces spanned by components computing the lct.
Subcomplex sk_pair(const SncdModel& model);

struct ConnectednessEntry
{
    std::set<StratumId> component;
    std::set<StratumId> essential;
    bool connected = false;
};

/// One entry per connected component of the dual complex: whether the part
/// of sk_pair inside it is nonempty and connected.
std::vector<ConnectednessEntry> connectedness_report(const SncdModel& model);

}  // namespace berkskel

#endif
