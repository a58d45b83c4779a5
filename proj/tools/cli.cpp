#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "berkskel/birational.hpp"
#include "berkskel/errors.hpp"
#include "berkskel/essential.hpp"
#include "berkskel/graph_export.hpp"
#include "berkskel/model_io.hpp"
#include "berkskel/modify.hpp"
#include "berkskel/skeleton.hpp"

namespace berkskel::cli {

namespace {

/// Raised after validation output has been written.
struct InvalidModel
{
};

std::string braces(const std::set<StratumId>& ids)
{
    std::string out = "{";
    bool first = true;
    for (const auto& id : ids) {
        out += (first ? "" : ",") + id;
        first = false;
    }
    return out + "}";
}

std::vector<std::string> split_ids(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

void print_violations(const std::vector<Violation>& violations, std::ostream& out)
{
    for (const auto& v : violations)
        out << "violation: " << v.code << ": " << v.detail << "\n";
}

SncdModel load_valid(const std::string& path, std::ostream& err)
{
    SncdModel model = load_model(path);
    const auto violations = validate(model);
    if (!violations.empty()) {
        err << "invalid model " << path << "\n";
        print_violations(violations, err);
        throw InvalidModel{};
    }
    return model;
}

void write_text(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw DomainError("cannot write '" + path + "'");
    file << text;
}

std::string point_line(const SncdModel& model, const SkeletonPoint& x)
{
    return "stratum=" + x.stratum + " alpha=" + join(x.alpha) +
           " w=" + join(barycentric(model, x).w);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weighted dual complexes, skeleta and weight functions of sncd-models"};
    app.require_subcommand(1);

    std::string model_path;
    std::string stratum;
    std::string alpha_text;
    std::string output;
    std::string trace_out;

    std::function<int()> action;

    auto add_model = [&](CLI::App* sub) { sub->add_option("model", model_path, "model file")->required(); };

    auto* validate_cmd = app.add_subcommand("validate", "check structural invariants");
    add_model(validate_cmd);
    validate_cmd->callback([&] {
        action = [&] {
            const auto model = load_model(model_path);
            const auto violations = validate(model);
            if (violations.empty()) {
                out << "valid\n";
                return int(Ok);
            }
            print_violations(violations, out);
            return int(DomainFailure);
        };
    });

    auto* info_cmd = app.add_subcommand("info", "summarize a model");
    add_model(info_cmd);
    info_cmd->callback([&] {
        action = [&] {
            const auto model = load_valid(model_path, err);
            out << "kind=" << to_string(model.kind()) << " m=" << model.m()
                << " ambient_dim=" << model.ambient_dim() << "\n";
            out << "components=" << model.components().size() << " strata=" << model.strata().size() << "\n";
            auto comps = model.components();
            std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
            for (const auto& c : comps)
                out << "component " << c.id << " N=" << c.N << " mu=" << c.mu
                    << " ratio=" << to_string(Rational(c.mu, c.N)) << "\n";
            for (const auto& id : model.sorted_stratum_ids()) {
                const auto& s = model.stratum(id);
                std::set<StratumId> vs(s.vertices.begin(), s.vertices.end());
                out << "stratum " << id << " vertices=" << braces(vs)
                    << " shape=" << to_string(classify_face(model, id)) << "\n";
            }
            return int(Ok);
        };
    });

    auto* weight_cmd = app.add_subcommand("weight", "weight function at a skeleton point");
    add_model(weight_cmd);
    weight_cmd->add_option("--stratum", stratum, "stratum id")->required();
    weight_cmd->add_option("--alpha", alpha_text, "coordinates p/q,... in vertex order")->required();
    weight_cmd->callback([&] {
        action = [&] {
            const auto model = load_valid(model_path, err);
            const auto x = make_point(model, stratum, parse_rational_list(alpha_text));
            out << to_string(weight(model, x)) << "\n";
            return int(Ok);
        };
    });

    auto* retract_cmd = app.add_subcommand("retract", "skeleton point with given component values");
    add_model(retract_cmd);
    retract_cmd->add_option("--center", stratum, "reduction stratum")->required();
    retract_cmd->add_option("--values", alpha_text, "values v(E_j), p/q,...")->required();
    retract_cmd->callback([&] {
        action = [&] {
            const auto model = load_valid(model_path, err);
            const auto x = retract(model, PointSpec{stratum, parse_rational_list(alpha_text)});
            out << point_line(model, x) << "\n";
            return int(Ok);
        };
    });

    auto* classify_cmd = app.add_subcommand("classify", "shape of the weight function per face");
    add_model(classify_cmd);
    classify_cmd->add_option("--stratum", stratum, "only this stratum");
    classify_cmd->callback([&] {
        action = [&] {
            const auto model = load_valid(model_path, err);
            if (!stratum.empty()) {
                out << stratum << " " << to_string(classify_face(model, stratum)) << "\n";
                return int(Ok);
            }
            for (const auto& id : model.sorted_stratum_ids())
                out << id << " " << to_string(classify_face(model, id)) << "\n";
            return int(Ok);
        };
    });

    std::vector<std::string> point_args;
    bool star = false;
    auto* blowup_cmd = app.add_subcommand("blowup", "blow up a stratum or a transverse center");
    add_model(blowup_cmd);
    auto* stratum_opt = blowup_cmd->add_option("--stratum", stratum, "stratum to blow up");
    auto* point_opt = blowup_cmd->add_option("--point", point_args, "S J c: center of codim c on components J (comma list) of S")
                          ->expected(3);
    stratum_opt->excludes(point_opt);
    blowup_cmd->add_flag("--star", star, "allow non-maximal strata (subdivide the whole star)");
    blowup_cmd->add_option("-o,--output", output, "output model file (default stdout)");
    blowup_cmd->add_option("--trace-out", trace_out, "write the blow-up trace");
    blowup_cmd->callback([&] {
        action = [&] {
            const auto model = load_valid(model_path, err);
            std::optional<BlowupResult> result;
            if (!point_args.empty()) {
                std::int64_t codim = 0;
                try {
                    codim = std::stoll(point_args[2]);
                } catch (const std::exception&) {
                    throw DomainError("codimension '" + point_args[2] + "' is not an integer");
                }
                result = blowup_point(model, point_args[0], split_ids(point_args[1]), codim);
            } else if (!stratum.empty()) {
                result = star ? subdivide_stratum(model, stratum) : blowup_stratum(model, stratum);
            } else {
                throw DomainError("blowup needs --stratum or --point");
            }
            const auto& e = result->model.component(result->new_vertex);
            err << "new_vertex=" << e.id << " N=" << e.N << " mu=" << e.mu << "\n";
            write_text(serialize_model(result->model), output, out);
            if (!trace_out.empty())
                write_text(serialize_trace(result->trace), trace_out, out);
            return int(Ok);
        };
    });

    std::string trace_in;
    auto* replay_cmd = app.add_subcommand("replay", "re-apply a recorded blow-up trace");
    add_model(replay_cmd);
    replay_cmd->add_option("--trace", trace_in, "trace file")->required();
    replay_cmd->add_option("-o,--output", output, "output model file (default stdout)");
    replay_cmd->callback([&] {
        action = [&] {
            const auto model = load_valid(model_path, err);
            const auto result = replay_trace(model, parse_trace(read_file(trace_in)));
            write_text(serialize_model(result.model), output, out);
            return int(Ok);
        };
    });

    auto* reduce_cmd = app.add_subcommand("reduce", "blow up until a rational point is divisorial");
    add_model(reduce_cmd);
    reduce_cmd->add_option("--stratum", stratum, "stratum id")->required();
    reduce_cmd->add_option("--alpha", alpha_text, "coordinates p/q,... in vertex order")->required();
    reduce_cmd->add_option("-o,--output", output, "write the final model");
    reduce_cmd->add_option("--trace-out", trace_out, "write the trace");
    reduce_cmd->callback([&] {
        action = [&] {
            const auto model = load_valid(model_path, err);
            const auto x = make_point(model, stratum, parse_rational_list(alpha_text));
            const auto result = reduce_to_divisorial(model, x);
            for (std::size_t i = 0; i < result.trace.steps.size(); ++i) {
                const auto& step = result.trace.steps[i];
                const auto& e = result.model.component(step.new_vertex);
                out << "step " << i + 1 << ": center=" << step.center_stratum << " pivot=" << result.pivots[i]
                    << " new=" << e.id << " N=" << e.N << " mu=" << e.mu << " -> "
                    << "stratum=" << result.path[i + 1].stratum
                    << " alpha=" << join(result.path[i + 1].alpha) << "\n";
            }
            const auto& v = result.model.component(result.vertex);
            out << "final=" << v.id << " N=" << v.N << " mu=" << v.mu
                << " weight=" << to_string(weight(result.model, result.path.back()))
                << " steps=" << result.trace.steps.size() << "\n";
            if (!output.empty())
                write_text(serialize_model(result.model), output, out);
            if (!trace_out.empty())
                write_text(serialize_trace(result.trace), trace_out, out);
            return int(Ok);
        };
    });

    std::vector<std::string> form_paths;
    auto* ks_cmd = app.add_subcommand("ks", "Kontsevich-Soibelman skeleton of a regular form");
    add_model(ks_cmd);
    ks_cmd->add_option("--form", form_paths, "form file (default: the model's own data)")->expected(0, 1);
    ks_cmd->callback([&] {
        action = [&] {
            const auto model = load_valid(model_path, err);
            const FormData form = form_paths.empty() ? model_form(model) : load_form(form_paths.front());
            const auto sk = ks_skeleton(model, form);
            out << "min=" << to_string(min_weight(model, form)) << "; strata=" << braces(sk.strata())
                << "; connected=" << (is_connected(model, sk).connected ? "true" : "false") << "\n";
            return int(Ok);
        };
    });

    auto* essential_cmd = app.add_subcommand("essential", "union of KS skeleta over several forms");
    add_model(essential_cmd);
    essential_cmd->add_option("--form", form_paths, "form files (default: the model's own data)");
    essential_cmd->callback([&] {
        action = [&] {
            const auto model = load_valid(model_path, err);
            std::vector<FormData> forms;
            for (const auto& p : form_paths)
                forms.push_back(load_form(p));
            if (forms.empty())
                forms.push_back(model_form(model));
            const auto sk = essential_skeleton(model, forms);
            out << "strata=" << braces(sk.strata())
                << "; connected=" << (is_connected(model, sk).connected ? "true" : "false") << "\n";
            return int(Ok);
        };
    });

    auto* lct_cmd = app.add_subcommand("lct", "log canonical threshold of a log resolution");
    add_model(lct_cmd);
    lct_cmd->callback([&] {
        action = [&] {
            const auto model = load_valid(model_path, err);
            out << "lct=" << to_string(lct(model)) << "\n";
            const auto sk = sk_pair(model);
            out << "sk_pair=" << braces(sk.strata())
                << "; connected=" << (is_connected(model, sk).connected ? "true" : "false") << "\n";
            return int(Ok);
        };
    });

    auto* report_cmd = app.add_subcommand("report", "connectedness of sk_pair per connected component");
    add_model(report_cmd);
    report_cmd->callback([&] {
        action = [&] {
            const auto model = load_valid(model_path, err);
            bool all = true;
            for (const auto& entry : connectedness_report(model)) {
                out << "component=" << braces(entry.component) << " essential=" << braces(entry.essential)
                    << " connected=" << (entry.connected ? "true" : "false") << "\n";
                all = all && entry.connected;
            }
            out << "all_connected=" << (all ? "true" : "false") << "\n";
            return int(Ok);
        };
    });

    std::string format = "graph";
    std::string highlight = "auto";
    auto* export_cmd = app.add_subcommand("export", "write the dual complex for external tools");
    add_model(export_cmd);
    export_cmd->add_option("--format", format, "graph (DOT) or structured (model JSON)")
        ->check(CLI::IsMember({"graph", "structured"}));
    export_cmd->add_option("--highlight", highlight, "auto, ks, sk-pair or none")
        ->check(CLI::IsMember({"auto", "ks", "sk-pair", "none"}));
    export_cmd->add_option("-o,--output", output, "output file (default stdout)");
    export_cmd->callback([&] {
        action = [&] {
            const auto model = load_valid(model_path, err);
            if (format == "structured") {
                write_text(serialize_model(model), output, out);
                return int(Ok);
            }
            std::optional<Subcomplex> marked;
            std::string mode = highlight;
            if (mode == "auto")
                mode = model.kind() == ModelKind::LogResolution ? "sk-pair" : "ks";
            if (mode == "sk-pair") {
                marked = sk_pair(model);
            } else if (mode == "ks") {
                try {
                    marked = ks_skeleton(model);
                } catch (const UnsupportedError&) {
                    if (highlight == "ks")
                        throw;
                }
            }
            write_text(export_dot(model, marked), output, out);
            return int(Ok);
        };
    });

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return ParseFailure;
    }

    try {
        return action();
    } catch (const InvalidModel&) {
        return DomainFailure;
    } catch (const ParseError& e) {
        err << "parse error at " << e.what() << "\n";
        return ParseFailure;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return DomainFailure;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return DomainFailure;
    }
}

}  // namespace berkskel::cli
