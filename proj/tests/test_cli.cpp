#include <catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "berkskel/model_io.hpp"
#include "cli.hpp"
#include "support/fixtures.hpp"

using namespace berkskel;
using namespace berkskel::testing;

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "berkskel");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "berkskel_test_cli";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("validate exit codes")
{
    const auto ok = run_cli({"validate", data_path("kodaira_In.model")});
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid\n");
    const auto bad = run_cli({"validate", test_data_path("broken_face.model")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("face-map mismatch") != std::string::npos);
    const auto malformed = run_cli({"validate", test_data_path("malformed.model")});
    CHECK(malformed.code == 2);
    CHECK(malformed.err.find("line") != std::string::npos);
    CHECK(run_cli({"validate", test_data_path("missing_key.model")}).code == 2);
    CHECK(run_cli({"validate", "/nonexistent/file.model"}).code == 2);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"weight", data_path("edge_2_3.model")}).code == 2);
}

TEST_CASE("weight command")
{
    const auto w = run_cli({"weight", data_path("edge_2_3.model"), "--stratum", "e_E1_E2", "--alpha", "1/4,1/6"});
    CHECK(w.code == 0);
    CHECK(w.out == "5/12\n");
    const auto v = run_cli({"weight", data_path("edge_2_3.model"), "--stratum", "v_E2", "--alpha", "1/3"});
    CHECK(v.out == "1/3\n");
    const auto bad = run_cli({"weight", data_path("edge_2_3.model"), "--stratum", "e_E1_E2", "--alpha", "1/2,1/2"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("5/2") != std::string::npos);
    CHECK(run_cli({"weight", data_path("edge_2_3.model"), "--stratum", "e_E1_E2", "--alpha", "a/b"}).code == 1);
}

TEST_CASE("retract and classify commands")
{
    const auto r = run_cli({"retract", data_path("edge_2_3.model"), "--center", "e_E1_E2", "--values", "1/4,1/6"});
    CHECK(r.code == 0);
    CHECK(r.out == "stratum=e_E1_E2 alpha=1/4,1/6 w=1/2,1/2\n");
    const auto c = run_cli({"classify", data_path("horizontal_edge.model"), "--stratum", "e_E1_E2"});
    CHECK(c.out == "e_E1_E2 concave\n");
}

TEST_CASE("ks, essential, lct and report commands")
{
    CHECK(run_cli({"ks", data_path("kodaira_I0star.model")}).out ==
          "min=1/2; strata={v_center}; connected=true\n");
    const auto e = run_cli({"essential", test_data_path("path3.model"), "--form", test_data_path("two_forms_a.form"),
                            "--form", test_data_path("two_forms_b.form")});
    CHECK(e.out == "strata={v_P1,v_P3}; connected=false\n");
    const auto l = run_cli({"lct", data_path("cusp.model")});
    CHECK(l.code == 0);
    CHECK(l.out.starts_with("lct=5/6\n"));
    CHECK(run_cli({"lct", data_path("kodaira_I3.model")}).code == 1);
    const auto rep = run_cli({"report", test_data_path("artificial_disconnected.model")});
    CHECK(rep.out.find("all_connected=false") != std::string::npos);
}

TEST_CASE("reduce command")
{
    const auto one = run_cli({"reduce", data_path("edge_2_3.model"), "--stratum", "e_E1_E2", "--alpha", "1/5,1/5"});
    CHECK(one.code == 0);
    CHECK(one.out.find("final=exc1 N=5 mu=2 weight=2/5 steps=1") != std::string::npos);
}

TEST_CASE("blowup writes a valid model and a replayable trace")
{
    const auto model_out = scratch("blown.model");
    const auto trace_out = scratch("blown.trace");
    const auto r = run_cli({"blowup", data_path("reduced_fiber.model"), "--stratum", "t_D1_D2_D3", "-o",
                            model_out.string(), "--trace-out", trace_out.string()});
    REQUIRE(r.code == 0);
    CHECK(r.err.find("new_vertex=exc1") != std::string::npos);
    CHECK(run_cli({"validate", model_out.string()}).code == 0);
    const auto replay = run_cli({"replay", data_path("reduced_fiber.model"), "--trace", trace_out.string()});
    CHECK(replay.out == read_file(model_out));

    const auto p = run_cli({"blowup", data_path("edge_2_3.model"), "--point", "e_E1_E2", "E1", "2"});
    CHECK(p.code == 0);
    CHECK(validate(parse_model(p.out)).empty());
    CHECK(run_cli({"blowup", data_path("edge_2_3.model"), "--stratum", "v_E1"}).code == 1);
    CHECK(run_cli({"blowup", data_path("reduced_fiber.model"), "--stratum", "e_D1_D2", "--star"}).code == 0);
}

TEST_CASE("export command")
{
    const auto g = run_cli({"export", data_path("kodaira_I0star.model"), "--format", "graph"});
    CHECK(g.code == 0);
    CHECK(g.out.starts_with("graph dual_complex {"));
    CHECK(g.out.find("\"v_center\" [label=") != std::string::npos);
    const auto s = run_cli({"export", data_path("kodaira_I0star.model"), "--format", "structured"});
    CHECK(parse_model(s.out) == load_model(data_path("kodaira_I0star.model")));
    CHECK(run_cli({"export", data_path("kodaira_I0star.model"), "--format", "png"}).code == 2);
}

TEST_CASE("outputs are byte-stable")
{
    for (const auto& path : bundled_models())
        for (const std::vector<std::string>& args :
             {std::vector<std::string>{"info", path}, {"classify", path}, {"export", path, "--format", "graph"},
              {"export", path, "--format", "structured"}}) {
            CHECK(run_cli(args).out == run_cli(args).out);
        }
}
