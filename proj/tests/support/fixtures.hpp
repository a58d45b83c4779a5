#ifndef BERKSKEL_TEST_FIXTURES_HPP
#define BERKSKEL_TEST_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "berkskel/model.hpp"
#include "berkskel/skeleton.hpp"

namespace berkskel::testing {

std::string data_path(const std::string& name);
std::string test_data_path(const std::string& name);

/// Every model shipped in data/.
std::vector<std::string> bundled_models();

/// Kodaira fiber files only.
std::vector<std::string> kodaira_models();

/// Two components joined by one edge "E1-E2".
SncdModel edge_model(std::int64_t N1, std::int64_t N2, std::int64_t mu1, std::int64_t mu2,
                     std::int64_t m = 1);

/// Random simplicial model on 3..6 components, ambient_dim 2 or 3, with
/// N in [1, 5], mu in [0, 6] and m in {1, 2}.
SncdModel random_model(std::mt19937& rng);

/// Random rational in (0, 1] with denominator at most max_den.
Rational random_unit_rational(std::mt19937& rng, int max_den);

/// Random positive barycentric point on a stratum.
BarycentricPoint random_barycentric(std::mt19937& rng, const SncdModel& model,
                                    const StratumId& stratum, int max_den = 12);

SkeletonPoint random_point(std::mt19937& rng, const SncdModel& model, const StratumId& stratum,
                           int max_den = 12);

}  // namespace berkskel::testing

#endif
