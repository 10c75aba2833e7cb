#include "symentropy/builtins.hpp"

#include <cctype>

#include "symentropy/constructions.hpp"
#include "symentropy/errors.hpp"

namespace symentropy::builtins {

namespace {

Graph from_one_based(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  std::vector<std::string> names;
  for (auto [a, b] : edges) list.emplace_back(a - 1, b - 1);
  for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  return Graph(n, std::move(list), std::move(names));
}

bool all_digits(const std::string& s) {
  if (s.empty() || s.size() > 4) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) fail(ErrorCode::kDomainError, "cycles need at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, std::move(edges));
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(edges));
}

Graph prism() {
  return from_one_based(6, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 6}, {6, 4}, {2, 5}, {3, 6}});
}

Graph bridged_cubic() {
  return from_one_based(10, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {2, 5}, {4, 5}, {5, 6},
                             {6, 7}, {6, 8}, {7, 9}, {8, 9}, {7, 10}, {8, 10}, {9, 10}});
}

Graph c4_c6() { return disjoint_union({cycle(4), cycle(6)}).graph; }

Graph by_name(const std::string& name) {
  if (name == "petersen") return petersen();
  if (name == "fig2" || name == "prism") return prism();
  if (name == "fig3" || name == "bridged_cubic") return bridged_cubic();
  if (name == "c4c6") return c4_c6();
  auto numeric_suffix = [&](const std::string& prefix) -> int {
    if (name.rfind(prefix, 0) != 0) return -1;
    std::string rest = name.substr(prefix.size());
    return all_digits(rest) ? std::stoi(rest) : -1;
  };
  if (int n = numeric_suffix("empty"); n >= 1) return empty(n);
  if (int n = numeric_suffix("path"); n >= 1) return path(n);
  if (int n = numeric_suffix("star"); n >= 1) return star(n);
  if (int n = numeric_suffix("c"); n >= 3) return cycle(n);
  if (int n = numeric_suffix("k"); n >= 1) return complete(n);
  if (name.size() > 1 && name[0] == 'k') {
    // k<a>_<b>[_<c>...]: complete multipartite
    std::vector<int> parts;
    std::string rest = name.substr(1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t next = rest.find('_', pos);
      std::string piece = rest.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (!all_digits(piece) || std::stoi(piece) < 1) break;
      parts.push_back(std::stoi(piece));
      if (next == std::string::npos) {
        if (parts.size() >= 2) return complete_multipartite(parts);
        break;
      }
      pos = next + 1;
    }
  }
  fail(ErrorCode::kParseError, "unknown built-in graph '" + name + "'");
}

std::vector<std::string> known_names() {
  return {"k<n>", "c<n>", "path<n>", "empty<n>", "star<n>", "k<a>_<b>[_<c>...]",
          "petersen", "fig2", "fig3", "c4c6"};
}

}  // namespace symentropy::builtins
