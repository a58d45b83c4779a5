#ifndef BERKSKEL_GRAPH_EXPORT_HPP
#define BERKSKEL_GRAPH_EXPORT_HPP

#include <optional>
#include <string>

#include "berkskel/essential.hpp"
#include "berkskel/model.hpp"

namespace berkskel {

/// Graphviz DOT rendering of the dual complex: one node per stratum, one
/// edge per codimension-one face relation. Members of `highlight` carry
/// essential="true" and are filled.
std::string export_dot(const SncdModel& model, const std::optional<Subcomplex>& highlight);

}  // namespace berkskel

#endif
