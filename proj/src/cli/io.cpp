#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "symentropy/builtins.hpp"
#include "symentropy/cli.hpp"
#include "symentropy/errors.hpp"
#include "symentropy/rational.hpp"

namespace symentropy::cli {

namespace {

constexpr int kMaxParsedVertices = 64;

std::optional<long> parse_integer(const std::string& token) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::vector<std::string> split_entries(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

bool is_exact_token(const std::string& token) {
  if (token.find('/') != std::string::npos) return true;
  return parse_integer(token).has_value();
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_number = 0;
  std::optional<std::pair<long, long>> header;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  auto error = [&](const std::string& what) {
    fail(ErrorCode::kParseError, "line " + std::to_string(line_number) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) error("expected two integers, found " + std::to_string(tokens.size()) + " fields");
    auto a = parse_integer(tokens[0]);
    auto b = parse_integer(tokens[1]);
    if (!a || !b) error("not an integer pair: '" + tokens[0] + " " + tokens[1] + "'");
    if (!header) {
      if (*a < 0 || *b < 0) error("negative count in header");
      if (*a > kMaxParsedVertices) {
        fail(ErrorCode::kSizeLimitExceeded, "line " + std::to_string(line_number) + ": more than 64 vertices");
      }
      header = {*a, *b};
      continue;
    }
    const long n = header->first;
    if (static_cast<long>(edges.size()) == header->second) error("more edges than the header declares");
    if (*a < 0 || *a >= n || *b < 0 || *b >= n) error("vertex out of range 0.." + std::to_string(n - 1));
    if (*a == *b) error("self-loop");
    const int u = static_cast<int>(std::min(*a, *b));
    const int v = static_cast<int>(std::max(*a, *b));
    if (!seen.insert({u, v}).second) error("repeated edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back(Edge{u, v});
  }
  if (!header) fail(ErrorCode::kParseError, "line " + std::to_string(line_number) + ": missing 'n m' header");
  if (static_cast<long>(edges.size()) != header->second) {
    error("header declares " + std::to_string(header->second) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(header->first), std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph load_graph(const std::string& source) {
  constexpr std::string_view kPrefix = "builtin:";
  if (source.rfind(kPrefix, 0) == 0) return builtins::by_name(source.substr(kPrefix.size()));
  std::ifstream file(source);
  if (!file) fail(ErrorCode::kParseError, "cannot open graph file '" + source + "'");
  return parse_edge_list(file);
}

Distribution parse_distribution(const std::string& text, int n) {
  std::string body = text;
  if (body == "uniform") return Distribution::uniform(n);
  std::error_code ec;
  if (body.find(',') == std::string::npos && std::filesystem::is_regular_file(body, ec)) {
    std::ifstream file(body);
    std::ostringstream contents;
    contents << file.rdbuf();
    body = contents.str();
  }
  const std::vector<std::string> entries = split_entries(body);
  if (entries.empty()) fail(ErrorCode::kEmptyInput, "empty distribution");
  if (static_cast<int>(entries.size()) != n) {
    fail(ErrorCode::kDimensionMismatch,
         "distribution has " + std::to_string(entries.size()) + " entries for " + std::to_string(n) + " vertices");
  }
  if (std::all_of(entries.begin(), entries.end(), is_exact_token)) {
    std::vector<Rational> weights;
    for (const auto& e : entries) weights.push_back(parse_rational(e));
    return Distribution::from_rationals(std::move(weights));
  }
  std::vector<double> weights;
  for (const auto& e : entries) {
    if (is_exact_token(e)) {
      weights.push_back(to_double(parse_rational(e)));
      continue;
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(e, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != e.size()) {
      fail(ErrorCode::kParseError, "bad distribution entry '" + e + "'");
    }
    weights.push_back(value);
  }
  return Distribution::from_doubles(weights, 1e-9);
}

std::uint64_t input_digest(const Graph& g) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_edge_list(g)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace symentropy::cli
