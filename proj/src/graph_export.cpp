#include "berkskel/graph_export.hpp"

#include <sstream>

namespace berkskel {

namespace {

std::string escaped(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

std::string quoted(const std::string& s)
{
    return "\"" + escaped(s) + "\"";
}

}  // namespace

std::string export_dot(const SncdModel& model, const std::optional<Subcomplex>& highlight)
{
    std::ostringstream out;
    out << "graph dual_complex {\n";
    out << "  node [shape=box, style=rounded];\n";
    for (const auto& id : model.sorted_stratum_ids()) {
        const auto& s = model.stratum(id);
        const bool marked = highlight && highlight->contains(id);
        std::string label;
        if (s.vertices.size() == 1) {
            const auto& c = model.component(s.vertices.front());
            label = escaped(c.id) + "\\nN=" + std::to_string(c.N) + " mu=" + std::to_string(c.mu);
        } else {
            for (const auto& v : s.vertices)
                label += (label.empty() ? "{" : ",") + escaped(v);
            label += "}";
        }
        out << "  " << quoted(id) << " [label=\"" << label << "\", dim=" << s.dimension()
            << ", essential=\"" << (marked ? "true" : "false") << "\"";
        if (marked)
            out << ", style=\"rounded,filled\", fillcolor=gold";
        out << "];\n";
    }
    for (const auto& id : model.sorted_stratum_ids())
        for (const auto& [j, f] : model.stratum(id).faces)
            out << "  " << quoted(f) << " -- " << quoted(id) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace berkskel
