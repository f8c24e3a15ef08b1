#pragma once

#include <string>

namespace planalg {

/// JSON text of the Haagerup principal graph shipped with the library.
std::string bundled_graph_json();
/// JSON text of the relations manifest shipped with the library.
std::string bundled_manifest_json();

}  // namespace planalg
