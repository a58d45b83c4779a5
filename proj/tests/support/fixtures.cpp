#include "support/fixtures.hpp"

#include <algorithm>
#include <filesystem>

namespace berkskel::testing {

std::string data_path(const std::string& name)
{
    return std::string(BERKSKEL_DATA_DIR) + "/" + name;
}

std::string test_data_path(const std::string& name)
{
    return std::string(BERKSKEL_TEST_DATA_DIR) + "/" + name;
}

std::vector<std::string> bundled_models()
{
    std::vector<std::string> out;
    for (const auto& entry : std::filesystem::directory_iterator(BERKSKEL_DATA_DIR))
        if (entry.path().extension() == ".model")
            out.push_back(entry.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> kodaira_models()
{
    std::vector<std::string> out;
    for (const auto& p : bundled_models())
        if (std::filesystem::path(p).filename().string().starts_with("kodaira_"))
            out.push_back(p);
    return out;
}

SncdModel edge_model(std::int64_t N1, std::int64_t N2, std::int64_t mu1, std::int64_t mu2,
                     std::int64_t m)
{
    return model_from_facets(ModelKind::SncdOverDvr, m, 2,
                             {{"E1", "E1", N1, mu1}, {"E2", "E2", N2, mu2}}, {{"E1", "E2"}});
}

SncdModel random_model(std::mt19937& rng)
{
    std::uniform_int_distribution<int> count(3, 6);
    std::uniform_int_distribution<int> dim(2, 3);
    std::uniform_int_distribution<int> mult(1, 5);
    std::uniform_int_distribution<int> mu(0, 6);
    std::uniform_int_distribution<int> degree(1, 2);

    const int n = count(rng);
    const int d = dim(rng);
    std::vector<PrimeComponent> comps;
    for (int i = 0; i < n; ++i) {
        const std::string id = "c" + std::to_string(i);
        comps.push_back({id, id, mult(rng), mu(rng)});
    }
    std::vector<std::vector<ComponentId>> facets;
    std::uniform_int_distribution<int> pick(0, n - 1);
    const int facet_count = n;
    for (int f = 0; f < facet_count; ++f) {
        std::vector<ComponentId> facet;
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i)
            idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        std::uniform_int_distribution<int> size(2, d);
        const int k = size(rng);
        for (int i = 0; i < k; ++i)
            facet.push_back(comps[idx[i]].id);
        facets.push_back(std::move(facet));
    }
    return model_from_facets(ModelKind::SncdOverDvr, degree(rng), d, std::move(comps), facets);
}

Rational random_unit_rational(std::mt19937& rng, int max_den)
{
    std::uniform_int_distribution<int> den(1, max_den);
    const int q = den(rng);
    std::uniform_int_distribution<int> num(1, q);
    return Rational(num(rng), q);
}

BarycentricPoint random_barycentric(std::mt19937& rng, const SncdModel& model,
                                    const StratumId& stratum, int max_den)
{
    const auto& s = model.stratum(stratum);
    std::vector<Rational> raw;
    Rational total = 0;
    for (std::size_t j = 0; j < s.vertices.size(); ++j) {
        raw.push_back(random_unit_rational(rng, max_den));
        total += raw.back();
    }
    for (auto& w : raw)
        w /= total;
    return BarycentricPoint{stratum, std::move(raw)};
}

SkeletonPoint random_point(std::mt19937& rng, const SncdModel& model, const StratumId& stratum,
                           int max_den)
{
    return embed(model, random_barycentric(rng, model, stratum, max_den));
}

}  // namespace berkskel::testing
