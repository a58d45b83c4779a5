#include "berkskel/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "berkskel/errors.hpp"

namespace berkskel {

using Json = nlohmann::ordered_json;

namespace {

std::string line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        // e.byte is one past the offending character.
        throw ParseError(line_column(text, e.byte > 0 ? e.byte - 1 : 0), e.what());
    }
}

/// Cursor over a JSON value that remembers its pointer for error messages.
class Node
{
public:
    Node(const Json& value, std::string path) : value_(value), path_(std::move(path)) {}

    const Json& json() const { return value_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void fail(const std::string& message) const
    {
        throw ParseError(path_.empty() ? "/" : path_, message);
    }

    Node at(const std::string& key) const
    {
        if (!value_.is_object())
            fail("expected an object");
        const auto it = value_.find(key);
        if (it == value_.end())
            fail("missing key '" + key + "'");
        return Node(*it, path_ + "/" + key);
    }

    std::optional<Node> find(const std::string& key) const
    {
        if (!value_.is_object())
            fail("expected an object");
        const auto it = value_.find(key);
        if (it == value_.end())
            return std::nullopt;
        return Node(*it, path_ + "/" + key);
    }

    Node at(std::size_t i) const { return Node(value_.at(i), path_ + "/" + std::to_string(i)); }

    std::string str() const
    {
        if (!value_.is_string())
            fail("expected a string");
        return value_.get<std::string>();
    }

    std::int64_t integer() const
    {
        if (!value_.is_number_integer())
            fail("expected an integer");
        return value_.get<std::int64_t>();
    }

    bool boolean() const
    {
        if (!value_.is_boolean())
            fail("expected a boolean");
        return value_.get<bool>();
    }

    std::size_t array_size() const
    {
        if (!value_.is_array())
            fail("expected an array");
        return value_.size();
    }

    std::vector<std::string> strings() const
    {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < array_size(); ++i)
            out.push_back(at(i).str());
        return out;
    }

    template <typename F>
    void for_each_member(F&& f) const
    {
        if (!value_.is_object())
            fail("expected an object");
        for (auto it = value_.begin(); it != value_.end(); ++it)
            f(it.key(), Node(it.value(), path_ + "/" + it.key()));
    }

private:
    const Json& value_;
    std::string path_;
};

std::vector<Exponent> parse_exponents(const Node& node)
{
    std::vector<Exponent> out;
    for (std::size_t i = 0; i < node.array_size(); ++i) {
        const Node row = node.at(i);
        Exponent beta;
        for (std::size_t j = 0; j < row.array_size(); ++j)
            beta.push_back(row.at(j).integer());
        out.push_back(std::move(beta));
    }
    return out;
}

Json exponents_json(const std::vector<Exponent>& exps)
{
    Json out = Json::array();
    for (const auto& beta : exps)
        out.push_back(beta);
    return out;
}

Json record_json(const StratumRecord& r)
{
    return Json{{"id", r.id}, {"vertices", r.vertices}};
}

}  // namespace

SncdModel parse_model(std::string_view text)
{
    const Json doc = parse_json(text);
    const Node root(doc, "");
    ModelKind kind;
    try {
        kind = parse_model_kind(root.at("kind").str());
    } catch (const DomainError& e) {
        root.at("kind").fail(e.what());
    }
    const auto m = root.at("m").integer();
    const auto ambient = root.at("ambient_dim").integer();

    std::vector<PrimeComponent> components;
    const Node comps = root.at("components");
    for (std::size_t i = 0; i < comps.array_size(); ++i) {
        const Node c = comps.at(i);
        PrimeComponent pc;
        pc.id = c.at("id").str();
        pc.name = c.find("name") ? c.at("name").str() : pc.id;
        pc.N = c.at("N").integer();
        pc.mu = c.at("mu").integer();
        components.push_back(std::move(pc));
    }

    std::vector<Stratum> strata;
    const Node ss = root.at("strata");
    for (std::size_t i = 0; i < ss.array_size(); ++i) {
        const Node s = ss.at(i);
        Stratum st;
        st.id = s.at("id").str();
        st.vertices = s.at("vertices").strings();
        if (const auto faces = s.find("faces"))
            faces->for_each_member([&](const std::string& k, const Node& v) { st.faces.emplace(k, v.str()); });
        if (const auto z = s.find("touches_zero"))
            st.touches_zero = z->boolean();
        if (const auto p = s.find("touches_pole"))
            st.touches_pole = p->boolean();
        if (const auto h = s.find("horizontal")) {
            st.horizontal = SeriesPair{Support{st.id, parse_exponents(h->at("num"))},
                                       Support{st.id, parse_exponents(h->at("den"))}};
        }
        strata.push_back(std::move(st));
    }
    return SncdModel(kind, m, ambient, std::move(components), std::move(strata));
}

std::string serialize_model(const SncdModel& model)
{
    Json doc;
    doc["kind"] = to_string(model.kind());
    doc["m"] = model.m();
    doc["ambient_dim"] = model.ambient_dim();
    Json comps = Json::array();
    for (const auto& c : model.components())
        comps.push_back(Json{{"id", c.id}, {"name", c.name}, {"N", c.N}, {"mu", c.mu}});
    doc["components"] = std::move(comps);
    Json strata = Json::array();
    for (const auto& s : model.strata()) {
        Json js;
        js["id"] = s.id;
        js["vertices"] = s.vertices;
        Json faces = Json::object();
        for (const auto& [j, f] : s.faces)
            faces[j] = f;
        js["faces"] = std::move(faces);
        js["touches_zero"] = s.touches_zero;
        js["touches_pole"] = s.touches_pole;
        if (s.horizontal)
            js["horizontal"] = Json{{"num", exponents_json(s.horizontal->num.exponents)},
                                    {"den", exponents_json(s.horizontal->den.exponents)}};
        strata.push_back(std::move(js));
    }
    doc["strata"] = std::move(strata);
    return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path.string(), "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SncdModel load_model(const std::filesystem::path& path)
{
    try {
        return parse_model(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.location(),
                         std::string(e.what()).substr(e.location().size() + 2));
    }
}

void save_model(const SncdModel& model, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DomainError("cannot write '" + path.string() + "'");
    out << serialize_model(model);
}

FormData parse_form(std::string_view text)
{
    const Json doc = parse_json(text);
    const Node root(doc, "");
    FormData form;
    form.m = root.at("m").integer();
    root.at("mu").for_each_member([&](const std::string& k, const Node& v) { form.mu.emplace(k, v.integer()); });
    if (const auto z = root.find("touches_zero"))
        z->for_each_member([&](const std::string& k, const Node& v) { form.touches_zero.emplace(k, v.boolean()); });
    if (const auto p = root.find("touches_pole"))
        p->for_each_member([&](const std::string& k, const Node& v) { form.touches_pole.emplace(k, v.boolean()); });
    return form;
}

std::string serialize_form(const FormData& form)
{
    Json doc;
    doc["m"] = form.m;
    Json mu = Json::object();
    for (const auto& [k, v] : form.mu)
        mu[k] = v;
    doc["mu"] = std::move(mu);
    Json z = Json::object();
    for (const auto& [k, v] : form.touches_zero)
        z[k] = v;
    doc["touches_zero"] = std::move(z);
    Json p = Json::object();
    for (const auto& [k, v] : form.touches_pole)
        p[k] = v;
    doc["touches_pole"] = std::move(p);
    return doc.dump(2) + "\n";
}

FormData load_form(const std::filesystem::path& path)
{
    return parse_form(read_file(path));
}

std::string serialize_trace(const BlowupTrace& trace)
{
    Json doc;
    Json steps = Json::array();
    for (const auto& step : trace.steps) {
        Json js;
        js["kind"] = to_string(step.kind);
        js["center_stratum"] = step.center_stratum;
        js["center_vertices"] = step.center_vertices;
        js["codim"] = step.codim;
        js["new_vertex"] = step.new_vertex;
        Json removed = Json::array();
        for (const auto& r : step.removed)
            removed.push_back(record_json(r));
        js["removed"] = std::move(removed);
        Json created = Json::array();
        for (const auto& c : step.created)
            created.push_back(Json{{"id", c.id}, {"vertices", c.vertices}, {"over", c.over}, {"dropped", c.dropped}});
        js["created"] = std::move(created);
        steps.push_back(std::move(js));
    }
    doc["steps"] = std::move(steps);
    Json pullback = Json::object();
    for (const auto& [c, row] : trace.pullback) {
        Json jr = Json::object();
        for (const auto& [f, k] : row)
            jr[f] = k;
        pullback[c] = std::move(jr);
    }
    doc["pullback"] = std::move(pullback);
    return doc.dump(2) + "\n";
}

BlowupTrace parse_trace(std::string_view text)
{
    const Json doc = parse_json(text);
    const Node root(doc, "");
    BlowupTrace trace;
    const Node steps = root.at("steps");
    for (std::size_t i = 0; i < steps.array_size(); ++i) {
        const Node s = steps.at(i);
        BlowupStep step;
        const auto kind = s.at("kind").str();
        if (kind == "stratum")
            step.kind = CenterKind::Stratum;
        else if (kind == "point")
            step.kind = CenterKind::Point;
        else
            s.at("kind").fail("unknown step kind '" + kind + "'");
        step.center_stratum = s.at("center_stratum").str();
        step.center_vertices = s.at("center_vertices").strings();
        step.codim = s.at("codim").integer();
        step.new_vertex = s.at("new_vertex").str();
        const Node removed = s.at("removed");
        for (std::size_t k = 0; k < removed.array_size(); ++k)
            step.removed.push_back({removed.at(k).at("id").str(), removed.at(k).at("vertices").strings()});
        const Node created = s.at("created");
        for (std::size_t k = 0; k < created.array_size(); ++k) {
            const Node c = created.at(k);
            step.created.push_back({c.at("id").str(), c.at("vertices").strings(), c.at("over").str(),
                                    c.at("dropped").strings()});
        }
        trace.steps.push_back(std::move(step));
    }
    root.at("pullback").for_each_member([&](const std::string& c, const Node& row) {
        auto& target = trace.pullback[c];
        row.for_each_member([&](const std::string& f, const Node& k) { target.emplace(f, k.integer()); });
    });
    return trace;
}

BlowupResult replay_trace(const SncdModel& model, const BlowupTrace& trace)
{
    BlowupResult out{model, {}, identity_trace(model)};
    for (const auto& step : trace.steps) {
        BlowupResult next = step.kind == CenterKind::Point
                                ? blowup_point(out.model, step.center_stratum, step.center_vertices, step.codim)
                                : subdivide_stratum(out.model, step.center_stratum);
        if (next.new_vertex != step.new_vertex)
            throw DomainError("replay diverged: expected new vertex '" + step.new_vertex + "', got '" +
                              next.new_vertex + "'");
        out.trace = compose(out.trace, next.trace);
        out.new_vertex = next.new_vertex;
        out.model = std::move(next.model);
    }
    return out;
}

}  // namespace berkskel
