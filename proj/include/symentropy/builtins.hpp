#pragma once

#include <string>
#include <vector>

#include "symentropy/graph.hpp"

namespace symentropy::builtins {

Graph empty(int n);
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
// K_{1,leaves}; the centre is vertex 0.
Graph star(int leaves);
// Parts are consecutive label ranges.
Graph complete_multipartite(const std::vector<int>& part_sizes);
Graph petersen();
// Triangular prism: the bridgeless cubic graph on v1..v6.
Graph prism();
// Cubic graph on v1..v10 with the single bridge {v5,v6}.
Graph bridged_cubic();
// C4 on 0..3 followed by C6 on 4..9.
Graph c4_c6();

// Resolves names such as "petersen", "c5", "k4", "k3_3", "k2_2_2",
// "star7", "path4", "empty3", "fig2", "fig3", "c4c6". Throws kParseError
// for unknown names.
Graph by_name(const std::string& name);

std::vector<std::string> known_names();

}  // namespace symentropy::builtins
