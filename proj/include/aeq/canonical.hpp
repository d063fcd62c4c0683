#pragma once

#include <string>

#include "aeq/graph.hpp"

namespace aeq {

/// Byte string identifying an isomorphism class: equal for isomorphic
/// graphs, distinct otherwise. First byte is the order, the rest packs
/// the canonical form's upper-triangle adjacency column by column.
using CanonicalLabel = std::string;

CanonicalLabel canonical_label(const Graph& g);

/// The relabeling of g whose label is canonical.
Graph canonical_form(const Graph& g);

/// Rebuilds the canonical form encoded in a label.
Graph graph_from_label(const CanonicalLabel& label);

}  // namespace aeq
