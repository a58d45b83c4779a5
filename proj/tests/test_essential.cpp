#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "berkskel/errors.hpp"
#include "berkskel/essential.hpp"
#include "berkskel/model_io.hpp"
#include "berkskel/modify.hpp"
#include "berkskel/skeleton.hpp"
#include "support/fixtures.hpp"

using namespace berkskel;
using namespace berkskel::testing;

namespace {

std::set<StratumId> all_strata(const SncdModel& model)
{
    const auto ids = model.sorted_stratum_ids();
    return {ids.begin(), ids.end()};
}

FormData uniform_form(const SncdModel& model, std::int64_t mu = 1, std::int64_t m = 1)
{
    FormData f;
    f.m = m;
    for (const auto& c : model.components())
        f.mu[c.id] = mu;
    return f;
}

Rational brute_min_ratio(const SncdModel& model, const FormData& form)
{
    Rational best = -1;
    for (const auto& c : model.components()) {
        const Rational r(form.mu.at(c.id), c.N);
        if (best < 0 || r < best)
            best = r;
    }
    return best;
}

}  // namespace

TEST_CASE("min_weight examples")
{
    const auto reduced = load_model(data_path("reduced_fiber.model"));
    CHECK(min_weight(reduced) == reduced.m());
    CHECK(min_weight(load_model(data_path("kodaira_I0star.model"))) == Rational(1, 2));
    const auto cusp_like = model_from_facets(
        ModelKind::SncdOverDvr, 1, 2,
        {{"C", "C", 1, 1}, {"E1", "E1", 2, 2}, {"E2", "E2", 3, 3}, {"E3", "E3", 6, 5}},
        {{"E3", "C"}, {"E3", "E1"}, {"E3", "E2"}});
    CHECK(min_weight(cusp_like) == Rational(5, 6));
}

TEST_CASE("ks_skeleton examples")
{
    const auto reduced = load_model(data_path("reduced_fiber.model"));
    CHECK(ks_skeleton(reduced).strata() == all_strata(reduced));
    const auto i0 = load_model(data_path("kodaira_I0star.model"));
    CHECK(ks_skeleton(i0).strata() == std::set<StratumId>{"v_center"});

    // Zero locus through the minimal edge excludes it.
    FormData f = model_form(reduced);
    f.touches_zero["t_D1_D2_D3"] = true;
    f.touches_zero["e_D1_D2"] = true;
    const auto sk = ks_skeleton(reduced, f);
    CHECK_FALSE(sk.contains("e_D1_D2"));
    CHECK_FALSE(sk.contains("t_D1_D2_D3"));
    CHECK(sk.contains("v_D1"));
}

TEST_CASE("poles and malformed forms are rejected")
{
    const auto model = load_model(data_path("kodaira_I3.model"));
    FormData f = model_form(model);
    for (const auto& s : model.strata())
        f.touches_pole[s.id] = true;
    CHECK_THROWS_AS(min_weight(model, f), UnsupportedError);
    CHECK_THROWS_AS(ks_skeleton(model, f), UnsupportedError);

    FormData missing = model_form(model);
    missing.mu.erase(missing.mu.begin());
    CHECK_THROWS_AS(check_form(model, missing), DomainError);

    FormData non_monotone = model_form(model);
    non_monotone.touches_zero[model.strata().front().id] = true;
    CHECK_THROWS_AS(check_form(model, non_monotone), DomainError);
}

TEST_CASE("essential_skeleton examples")
{
    const auto path3 = load_model(test_data_path("path3.model"));
    const auto a = load_form(test_data_path("two_forms_a.form"));
    const auto b = load_form(test_data_path("two_forms_b.form"));
    CHECK(ks_skeleton(path3, a).strata() == std::set<StratumId>{"v_P1"});
    CHECK(ks_skeleton(path3, b).strata() == std::set<StratumId>{"v_P3"});
    const std::vector<FormData> one{a};
    CHECK(essential_skeleton(path3, one) == ks_skeleton(path3, a));
    const std::vector<FormData> both{a, b};
    CHECK(essential_skeleton(path3, both).strata() == std::set<StratumId>{"v_P1", "v_P3"});
    const std::vector<FormData> none;
    CHECK_THROWS_AS(essential_skeleton(path3, none), DomainError);
}

TEST_CASE("is_connected examples")
{
    const auto cycle = load_model(data_path("kodaira_In.model"));
    const auto c = is_connected(cycle, ks_skeleton(cycle));
    CHECK(c.connected);
    CHECK(ks_skeleton(cycle).strata() == all_strata(cycle));

    const auto path3 = load_model(test_data_path("path3.model"));
    const auto split = is_connected(path3, ks_skeleton(path3));
    CHECK_FALSE(split.connected);
    CHECK(split.blocks == 2);

    CHECK(is_connected(path3, Subcomplex::make(path3, {"v_P2"})).connected);
    const auto empty = is_connected(path3, Subcomplex{});
    CHECK_FALSE(empty.connected);
    CHECK(empty.empty);
}

TEST_CASE("Subcomplex::make requires face closure")
{
    const auto path3 = load_model(test_data_path("path3.model"));
    CHECK_THROWS_AS(Subcomplex::make(path3, {"e_P1_P2"}), DomainError);
    CHECK_NOTHROW(Subcomplex::make(path3, {"e_P1_P2", "v_P1", "v_P2"}));
}

TEST_CASE("genus one battery")
{
    for (const auto& path : kodaira_models()) {
        INFO(path);
        const auto model = load_model(path);
        CHECK(is_connected(model, ks_skeleton(model, uniform_form(model))).connected);
        CHECK(is_connected(model, ks_skeleton(model)).connected);
    }
}

TEST_CASE("property: ks_skeleton is face closed and attains min_weight")
{
    std::mt19937 rng(51);
    for (int iter = 0; iter < 40; ++iter) {
        const auto model = random_model(rng);
        const auto form = model_form(model);
        const Rational mn = min_weight(model);
        REQUIRE(mn == brute_min_ratio(model, form));
        const auto sk = ks_skeleton(model);
        REQUIRE_FALSE(sk.empty());
        REQUIRE_NOTHROW(Subcomplex::make(model, sk.strata()));
        for (const auto& id : sk.strata()) {
            for (const auto& v : model.stratum(id).vertices)
                REQUIRE(weight(model, vertex_point(model, v)) == mn);
            for (int k = 0; k < 5; ++k)
                REQUIRE(weight(model, random_point(rng, model, id)) == mn);
        }
        // Off the skeleton every interior point is strictly heavier.
        for (const auto& s : model.strata())
            if (!sk.contains(s.id))
                REQUIRE(weight(model, random_point(rng, model, s.id)) > mn);
    }
}

TEST_CASE("property: scaling a form leaves ks_skeleton unchanged")
{
    std::mt19937 rng(52);
    for (int iter = 0; iter < 30; ++iter) {
        const auto model = random_model(rng);
        const auto form = model_form(model);
        FormData scaled = form;
        const std::int64_t d = 2 + iter % 4;
        scaled.m *= d;
        for (auto& [c, mu] : scaled.mu)
            mu *= d;
        REQUIRE(ks_skeleton(model, scaled) == ks_skeleton(model, form));
        REQUIRE(min_weight(model, scaled) == d * min_weight(model, form));
    }
}

TEST_CASE("property: ks_skeleton is invariant under blow-up")
{
    std::mt19937 rng(53);
    for (int iter = 0; iter < 30; ++iter) {
        const auto model = random_model(rng);
        std::vector<StratumId> centers;
        for (const auto& s : model.strata())
            if (s.vertices.size() > 1 && is_maximal(model, s.id))
                centers.push_back(s.id);
        const auto r = blowup_stratum(model, centers[iter % centers.size()]);
        REQUIRE(min_weight(r.model) == min_weight(model));
        const auto before = ks_skeleton(model);
        const auto after = ks_skeleton(r.model);
        for (const auto& s : model.strata())
            for (int k = 0; k < 5; ++k) {
                const auto x = random_point(rng, model, s.id);
                const auto y = transfer_point(model, r.model, r.trace, x);
                REQUIRE(before.contains(x.stratum) == after.contains(y.stratum));
            }
        // Every new open face is covered by an old one.
        for (const auto& id : after.strata()) {
            const auto& s = r.model.stratum(id);
            for (const auto& v : s.vertices)
                REQUIRE(Rational(r.model.component(v).mu, r.model.component(v).N) == min_weight(model));
        }
    }
}
