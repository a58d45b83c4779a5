#ifndef BERKSKEL_SERIES_HPP
#define BERKSKEL_SERIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "berkskel/rational.hpp"

namespace berkskel {

using StratumId = std::string;
using Exponent = std::vector<std::int64_t>;

/**
 * Exponent support of an admissible expansion f = sum_beta c_beta z^beta in
 * the local coordinates of a stratum. Coordinates follow the stratum's vertex
 * order. Every listed coefficient is a unit and coefficients are generic, so
 * no cancellation happens in sums.
 */
struct Support
{
    StratumId stratum;
    std::vector<Exponent> exponents;

    bool operator==(const Support&) const = default;
};

/// num / den as a local rational function under generic-unit semantics.
struct SeriesPair
{
    Support num;
    Support den;

    bool operator==(const SeriesPair&) const = default;
};

/// Weights of a monomial valuation on the coordinates of a stratum.
/// Nonnegative, not all zero; no normalization is imposed here.
struct AlphaVector
{
    StratumId stratum;
    std::vector<Rational> alpha;
};

/// min over beta of alpha . beta: the monomial valuation of the function.
Rational val(const Support& s, const AlphaVector& a);

/// Drops exponents dominated coordinatewise by another exponent. Result is
/// sorted and duplicate free; val is unchanged for every nonnegative alpha.
Support reduce_support(const Support& s);

/// Minkowski sum, reduced. val(product) = val(s1) + val(s2).
Support product(const Support& s1, const Support& s2);

/// Union, reduced. val(sum) = min(val(s1), val(s2)) under generic
/// coefficients; with cancellation the true valuation could only be larger.
Support sum(const Support& s1, const Support& s2);

/// Exponents of the reduced support on which alpha . beta attains val.
std::vector<Exponent> initial_support(const Support& s, const AlphaVector& a);

/// Valuation of a quotient: val(num) - val(den).
Rational val(const SeriesPair& f, const AlphaVector& a);

/// Checks shape: nonempty, nonnegative entries, every vector of length r.
/// Throws DomainError otherwise.
void check_support(const Support& s, std::size_t r);

}  // namespace berkskel

#endif
