#include "berkskel/series.hpp"

#include <algorithm>
#include <optional>

#include "berkskel/errors.hpp"

namespace berkskel {

namespace {

void require_same_stratum(const StratumId& a, const StratumId& b)
{
    if (a != b)
        throw DomainError("stratum mismatch: '" + a + "' vs '" + b + "'");
}

void require_nonempty(const Support& s)
{
    if (s.exponents.empty())
        throw DomainError("empty support on stratum '" + s.stratum + "'");
}

Rational dot(const Exponent& beta, const std::vector<Rational>& alpha)
{
    if (beta.size() != alpha.size())
        throw DomainError("exponent length " + std::to_string(beta.size()) +
                          " does not match alpha length " + std::to_string(alpha.size()));
    Rational out = 0;
    for (std::size_t j = 0; j < beta.size(); ++j)
        out += alpha[j] * beta[j];
    return out;
}

bool dominates(const Exponent& lo, const Exponent& hi)
{
    for (std::size_t j = 0; j < lo.size(); ++j)
        if (lo[j] > hi[j])
            return false;
    return true;
}

}  // namespace

void check_support(const Support& s, std::size_t r)
{
    require_nonempty(s);
    for (const auto& beta : s.exponents) {
        if (beta.size() != r)
            throw DomainError("exponent of length " + std::to_string(beta.size()) +
                              " on stratum '" + s.stratum + "' with " + std::to_string(r) +
                              " coordinates");
        for (auto b : beta)
            if (b < 0)
                throw DomainError("negative exponent on stratum '" + s.stratum + "'");
    }
}

Rational val(const Support& s, const AlphaVector& a)
{
    require_same_stratum(s.stratum, a.stratum);
    require_nonempty(s);
    std::optional<Rational> best;
    for (const auto& beta : s.exponents) {
        Rational v = dot(beta, a.alpha);
        if (!best || v < *best)
            best = std::move(v);
    }
    return *best;
}

Rational val(const SeriesPair& f, const AlphaVector& a)
{
    return val(f.num, a) - val(f.den, a);
}

Support reduce_support(const Support& s)
{
    require_nonempty(s);
    std::vector<Exponent> sorted = s.exponents;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    // In lexicographic order a dominating exponent always precedes the ones
    // it dominates, so one forward pass against the kept set suffices.
    std::vector<Exponent> kept;
    for (const auto& beta : sorted) {
        const bool dominated = std::any_of(kept.begin(), kept.end(),
                                           [&](const Exponent& k) { return dominates(k, beta); });
        if (!dominated)
            kept.push_back(beta);
    }
    return Support{s.stratum, std::move(kept)};
}

Support product(const Support& s1, const Support& s2)
{
    require_same_stratum(s1.stratum, s2.stratum);
    require_nonempty(s1);
    require_nonempty(s2);
    const Support a = reduce_support(s1);
    const Support b = reduce_support(s2);
    std::vector<Exponent> sums;
    sums.reserve(a.exponents.size() * b.exponents.size());
    for (const auto& x : a.exponents) {
        for (const auto& y : b.exponents) {
            if (x.size() != y.size())
                throw DomainError("exponent length mismatch in product");
            Exponent z(x.size());
            for (std::size_t j = 0; j < x.size(); ++j)
                z[j] = x[j] + y[j];
            sums.push_back(std::move(z));
        }
    }
    return reduce_support(Support{s1.stratum, std::move(sums)});
}

Support sum(const Support& s1, const Support& s2)
{
    require_same_stratum(s1.stratum, s2.stratum);
    std::vector<Exponent> all = s1.exponents;
    all.insert(all.end(), s2.exponents.begin(), s2.exponents.end());
    return reduce_support(Support{s1.stratum, std::move(all)});
}

std::vector<Exponent> initial_support(const Support& s, const AlphaVector& a)
{
    require_same_stratum(s.stratum, a.stratum);
    const Support reduced = reduce_support(s);
    const Rational target = val(reduced, a);
    std::vector<Exponent> out;
    for (const auto& beta : reduced.exponents)
        if (dot(beta, a.alpha) == target)
            out.push_back(beta);
    return out;
}

}  // namespace berkskel
