#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "berkskel/errors.hpp"
#include "berkskel/model.hpp"
#include "berkskel/model_io.hpp"
#include "support/fixtures.hpp"

using namespace berkskel;
using namespace berkskel::testing;

namespace {

bool has_code(const std::vector<Violation>& report, const std::string& code)
{
    return std::any_of(report.begin(), report.end(),
                       [&](const Violation& v) { return v.code == code; });
}

SncdModel triangle()
{
    return model_from_facets(ModelKind::SncdOverDvr, 1, 3,
                             {{"1", "1", 1, 1}, {"2", "2", 1, 1}, {"3", "3", 1, 1}},
                             {{"1", "2", "3"}});
}

SncdModel with_strata(const SncdModel& base, std::vector<Stratum> strata)
{
    return SncdModel(base.kind(), base.m(), base.ambient_dim(), base.components(), std::move(strata));
}

}  // namespace

TEST_CASE("minimal model is valid")
{
    const SncdModel model(ModelKind::SncdOverDvr, 1, 1, {{"A", "A", 1, 1}},
                          {Stratum{"v_A", {"A"}, {}, false, false, std::nullopt}});
    CHECK(validate(model).empty());
}

TEST_CASE("broken face map is reported")
{
    const auto model = load_model(test_data_path("broken_face.model"));
    CHECK(has_code(validate(model), "face-map mismatch"));
}

TEST_CASE("flag monotonicity is enforced")
{
    auto strata = edge_model(1, 1, 1, 1).strata();
    for (auto& s : strata)
        if (s.id == "v_E1")
            s.touches_zero = true;
    const auto bad = with_strata(edge_model(1, 1, 1, 1), strata);
    CHECK(has_code(validate(bad), "flag monotonicity"));
    for (auto& s : strata)
        s.touches_zero = true;
    CHECK(validate(with_strata(bad, strata)).empty());
}

TEST_CASE("structural violations")
{
    const auto base = edge_model(1, 1, 1, 1);
    SECTION("multiplicity")
    {
        auto comps = base.components();
        comps[0].N = 0;
        CHECK(has_code(validate(SncdModel(base.kind(), 1, 2, comps, base.strata())),
                       "bad multiplicity"));
    }
    SECTION("codimension bound")
    {
        const SncdModel thin(base.kind(), 1, 1, base.components(), base.strata());
        CHECK(has_code(validate(thin), "codimension bound"));
    }
    SECTION("missing vertex stratum")
    {
        auto strata = base.strata();
        std::erase_if(strata, [](const Stratum& s) { return s.id == "v_E2"; });
        const auto report = validate(with_strata(base, strata));
        CHECK(has_code(report, "missing vertex stratum"));
    }
    SECTION("unknown component")
    {
        auto strata = base.strata();
        strata.push_back(Stratum{"v_Z", {"Z"}, {}, false, false, std::nullopt});
        CHECK(has_code(validate(with_strata(base, strata)), "unknown component"));
    }
    SECTION("duplicate id")
    {
        auto strata = base.strata();
        strata.push_back(strata.front());
        CHECK(has_code(validate(with_strata(base, strata)), "duplicate id"));
    }
    SECTION("repeated vertex")
    {
        auto strata = base.strata();
        strata.push_back(Stratum{"bad", {"E1", "E1"}, {{"E1", "v_E1"}}, false, false, std::nullopt});
        CHECK(has_code(validate(with_strata(base, strata)), "repeated vertex"));
    }
    SECTION("missing face")
    {
        auto strata = base.strata();
        for (auto& s : strata)
            if (s.vertices.size() == 2)
                s.faces.erase("E1");
        CHECK(has_code(validate(with_strata(base, strata)), "missing face"));
    }
    SECTION("degree")
    {
        CHECK(has_code(validate(SncdModel(base.kind(), 0, 2, base.components(), base.strata())),
                       "bad degree"));
        CHECK(has_code(validate(SncdModel(ModelKind::LogResolution, 2, 2, base.components(),
                                          base.strata())),
                       "bad degree"));
    }
}

TEST_CASE("simplicial identity violation")
{
    // Dropping 3 then 2 reaches a second singleton on component 1, while
    // dropping 2 then 3 reaches v_1.
    auto strata = triangle().strata();
    strata.push_back(Stratum{"v_1x", {"1"}, {}, false, false, std::nullopt});
    for (auto& s : strata)
        if (s.id == "1-2")
            s.faces["2"] = "v_1x";
    const auto report = validate(with_strata(triangle(), strata));
    CHECK(has_code(report, "simplicial identity"));
    CHECK_FALSE(has_code(report, "face-map mismatch"));
}

TEST_CASE("face queries")
{
    const auto model = triangle();
    const std::vector<ComponentId> all{"1", "2", "3"};
    CHECK(face(model, "1-2-3", all) == "1-2-3");
    const std::vector<ComponentId> one{"1"};
    CHECK(face(model, "1-2-3", one) == "v_1");
    const std::vector<ComponentId> none;
    CHECK_THROWS_AS(face(model, "1-2-3", none), DomainError);
    const std::vector<ComponentId> foreign{"4"};
    CHECK_THROWS_AS(face(model, "1-2-3", foreign), DomainError);
    CHECK(closed_star_down(model, "1-2").size() == 3);
    CHECK(star(model, "v_1") == std::set<StratumId>{"v_1", "1-2", "1-3", "1-2-3"});
    CHECK(is_maximal(model, "1-2-3"));
    CHECK_FALSE(is_maximal(model, "1-2"));
}

TEST_CASE("connected components examples")
{
    const auto cycle = load_model(data_path("kodaira_I3.model"));
    const auto ids = cycle.sorted_stratum_ids();
    const std::set<StratumId> all(ids.begin(), ids.end());
    CHECK(connected_components(cycle, all).size() == 1);
    const auto vertices = [&] {
        std::set<StratumId> out;
        for (const auto& s : cycle.strata())
            if (s.vertices.size() == 1)
                out.insert(s.id);
        return out;
    }();
    CHECK(connected_components(cycle, vertices).size() == 3);
    CHECK(connected_components(cycle, {}).empty());
    CHECK_THROWS_AS(connected_components(cycle, {"nope"}), DomainError);
}

TEST_CASE("property: face is independent of removal order")
{
    std::mt19937 rng(21);
    for (int iter = 0; iter < 40; ++iter) {
        const auto model = random_model(rng);
        REQUIRE(validate(model).empty());
        for (const auto& s : model.strata()) {
            auto order = s.vertices;
            std::sort(order.begin(), order.end());
            std::set<StratumId> reached;
            do {
                // drop all but the last vertex, one at a time
                StratumId cur = s.id;
                for (std::size_t k = 0; k + 1 < order.size(); ++k)
                    cur = model.stratum(cur).faces.at(order[k]);
                reached.insert(cur);
                const std::vector<ComponentId> keep{order.back()};
                REQUIRE(face(model, s.id, keep) == cur);
            } while (std::next_permutation(order.begin(), order.end()));
            std::set<ComponentId> last;
            for (const auto& v : s.vertices)
                last.insert(v);
            REQUIRE(reached.size() == last.size());
        }
    }
}

TEST_CASE("property: connected components partition the input")
{
    std::mt19937 rng(22);
    for (int iter = 0; iter < 60; ++iter) {
        const auto model = random_model(rng);
        std::set<StratumId> input;
        std::bernoulli_distribution keep(0.5);
        for (const auto& s : model.strata())
            if (keep(rng))
                input.insert(s.id);
        const auto blocks = connected_components(model, input);
        std::set<StratumId> seen;
        std::size_t total = 0;
        for (const auto& b : blocks) {
            REQUIRE_FALSE(b.empty());
            total += b.size();
            seen.insert(b.begin(), b.end());
        }
        REQUIRE(total == seen.size());
        REQUIRE(seen == input);
    }
}

TEST_CASE("bundled models are valid")
{
    for (const auto& path : bundled_models()) {
        INFO(path);
        CHECK(validate(load_model(path)).empty());
    }
}
