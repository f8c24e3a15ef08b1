#include "bundled_data.hpp"
#include "planalg/data.hpp"
#include "planalg/graph.hpp"

namespace planalg {

std::string bundled_graph_json() { return detail::kHaagerupGraphJson; }

std::string bundled_manifest_json() { return detail::kRelationsManifestJson; }

BipartiteGraph haagerup_graph() {
    static const BipartiteGraph graph = BipartiteGraph::from_json(detail::kHaagerupGraphJson);
    return graph;
}

}  // namespace planalg
