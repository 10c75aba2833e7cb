#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symentropy/certification.hpp"
#include "symentropy/chromatic_entropy.hpp"
#include "symentropy/cli.hpp"
#include "symentropy/closed_forms.hpp"
#include "symentropy/constructions.hpp"
#include "symentropy/fractional.hpp"
#include "symentropy/structure.hpp"

namespace symentropy::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string graph;
  std::string dist = "uniform";
  double tol = 1e-9;
  std::string route = "auto";
  std::string variant = "away";
  bool numeric = false;
  bool timing = false;
  std::string csv;
};

std::string decimal(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

std::string short_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Json bits(double value, double tol) {
  return Json{{"value", decimal(value)}, {"unit", "bits"}, {"tolerance", short_number(tol)}};
}

Json exact(const Rational& r) { return Json{{"value", decimal(to_double(r))}, {"exact", to_fraction_string(r)}}; }

Json members(VertexSet s) { return Json(s.members()); }

Json edge_pair(const Edge& e) { return Json::array({e.u, e.v}); }

Json decimals(std::span<const double> xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(decimal(x));
  return out;
}

Json distribution_json(const Distribution& p) {
  Json weights = Json::array();
  if (p.exact()) {
    for (const Rational& w : p.exact_weights()) weights.push_back(to_fraction_string(w));
  } else {
    for (double w : p.weights()) weights.push_back(decimal(w));
  }
  return Json{{"mode", p.exact() ? "exact" : "float"}, {"weights", weights}};
}

Json entropy_json(const Graph& g, const Distribution& p, const Options& opt) {
  EntropyOptions options;
  options.tol_bits = opt.tol;
  if (opt.variant == "plain") options.variant = FrankWolfeVariant::kPlain;
  const EntropyResult r = graph_entropy(g, p, options);
  Json support = Json::array();
  for (const auto& [set, weight] : r.minimizer.support) support.push_back(Json{{"set", members(set)}, {"weight", decimal(weight)}});
  return Json{{"value", bits(r.value_bits, opt.tol)},
              {"gap", decimal(r.gap_bits)},
              {"iterations", r.iterations},
              {"variant", opt.variant},
              {"distribution", distribution_json(p)},
              {"minimizer", Json{{"support", support}, {"coordinates", decimals(r.minimizer.coordinates)}}}};
}

Json fractional_json(const Graph& g) {
  const FractionalChromatic f = fractional_chromatic_number(g);
  Json coloring = Json::array();
  for (const auto& [set, weight] : f.coloring) coloring.push_back(Json{{"set", members(set)}, {"weight", to_fraction_string(weight)}});
  Json duals = Json::array();
  for (const Rational& y : f.vertex_weights) duals.push_back(to_fraction_string(y));
  return Json{{"value", exact(f.value)},
              {"coloring", coloring},
              {"vertex_weights", duals},
              {"validated", is_valid_fractional_coloring(g, f.coloring, f.value)}};
}

Json edge_fractional_json(const Graph& g) {
  const FractionalEdgeChromatic f = fractional_edge_chromatic_number(g);
  const KGraphCheck k = is_k_graph(g);
  Json out{{"value", exact(f.value)}, {"max_degree", g.max_degree()}};
  out["attained_by"] = f.witness ? Json{{"odd_set", members(*f.witness)}} : Json("max-degree");
  out["is_k_graph"] = k.is_k_graph;
  if (k.odd_cuts && k.odd_cuts->witness) {
    out["odd_cut_witness"] = Json{{"set", members(*k.odd_cuts->witness)}, {"cut", k.odd_cuts->witness_cut}};
  }
  return out;
}

Json chromatic_entropy_json(const Graph& g, const Distribution& p, const Options& opt) {
  const ChromaticEntropy c = min_entropy_coloring(g, p);
  Json cells = Json::array();
  for (VertexSet cell : c.coloring.cells) cells.push_back(members(cell));
  Json out{{"value", bits(c.value_bits, 1e-12)}, {"cells", cells}, {"masses", decimals(c.coloring.masses)}};
  if (!g.names().empty()) {
    Json named = Json::array();
    for (VertexSet cell : c.coloring.cells) {
      Json row = Json::array();
      cell.for_each([&](Vertex v) { row.push_back(g.name_of(v)); });
      named.push_back(row);
    }
    out["cell_names"] = named;
  }
  out["distribution"] = distribution_json(p);
  out["validated"] = is_valid_coloring(g, c.coloring.cells);
  (void)opt;
  return out;
}

Json bounds_json(const Graph& g, const Distribution& p, const Options& opt) {
  const EntropyBounds b = chromatic_entropy_bounds(g, p, opt.tol);
  Json out{{"neg_log_alpha", bits(b.neg_log_alpha_bits, 0.0)},
           {"graph_entropy", bits(b.graph_entropy_bits, opt.tol)},
           {"chromatic_entropy", bits(b.chromatic_entropy_bits, 1e-12)},
           {"log_chromatic_number", bits(b.log_chromatic_number_bits, 0.0)}};
  if (b.uniform_lower_bound_bits) out["log_n_over_alpha"] = bits(*b.uniform_lower_bound_bits, 0.0);
  return out;
}

Json certificate_json(const Graph& subject, const Graph& g, const Certificate& cert) {
  return std::visit(
      [&](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, CliqueCover>) {
          Json cliques = Json::array();
          for (VertexSet k : c) cliques.push_back(members(k));
          return Json{{"type", "clique-cover"},
                      {"cliques", cliques},
                      {"validated", is_valid_clique_cover(subject, c, maximum_cliques(subject).omega)}};
        } else if constexpr (std::is_same_v<T, std::vector<Edge>>) {
          Json edges = Json::array();
          for (const Edge& e : c) edges.push_back(edge_pair(e));
          return Json{{"type", "perfect-matching"}, {"edges", edges}};
        } else if constexpr (std::is_same_v<T, KktCertificate>) {
          const int k = regular_degree(g).value_or(0);
          Json gamma = Json::array();
          for (const auto& [set, value] : c.gamma) gamma.push_back(Json{{"set", members(set)}, {"value", decimal(value)}});
          return Json{{"type", "kkt"},
                      {"x", decimals(c.x)},
                      {"x_exact", to_fraction_string(make_rational(1, k))},
                      {"lambda", decimals(c.lambda)},
                      {"lambda_exact", to_fraction_string(make_rational(k, 2 * g.size()))},
                      {"gamma", gamma},
                      {"max_stationarity_residual",
                       decimal(c.stationarity_residual.empty()
                                   ? 0.0
                                   : std::abs(*std::max_element(c.stationarity_residual.begin(),
                                                                c.stationarity_residual.end(),
                                                                [](double a, double b) { return std::abs(a) < std::abs(b); })))}};
        } else if constexpr (std::is_same_v<T, VertexTransitiveNote>) {
          return Json{{"type", "vertex-transitive"}, {"alpha", c.alpha}, {"log_n_over_alpha", decimal(c.log_ratio_bits)}};
        } else {
          return Json{{"type", "numeric"},
                      {"entropy", decimal(c.entropy_bits)},
                      {"gap", decimal(c.gap_bits)},
                      {"chi_f", to_fraction_string(c.chi_f)},
                      {"log_chi_f", decimal(c.log_chi_f_bits)}};
        }
      },
      cert);
}

Json verdict_json(const Graph& subject, const Graph& g, const SymmetryVerdict& v, const char* subject_name) {
  Json out{{"subject", subject_name},
           {"verdict", std::string(to_string(v.verdict))},
           {"route", std::string(to_string(v.route))},
           {"certificate", certificate_json(subject, g, v.certificate)}};
  if (v.counterexample) {
    const Counterexample& c = *v.counterexample;
    Json ce{{"independent_set", members(c.independent_set)}};
    if (c.hall_set) ce["hall_set"] = members(*c.hall_set);
    ce["point"] = decimals(c.point);
    ce["bound"] = bits(c.bound_bits, 1e-12);
    ce["log_omega"] = decimal(c.log_omega_bits);
    out["counterexample"] = ce;
  }
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

bool is_precondition(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPerfect:
    case ErrorCode::kNotBipartite:
    case ErrorCode::kIsolatedVertex:
    case ErrorCode::kNotKGraph:
    case ErrorCode::kKBelowThree:
    case ErrorCode::kNotCubic:
    case ErrorCode::kHasBridge:
    case ErrorCode::kEmptyEdgeSet:
      return true;
    default:
      return false;
  }
}

Json symmetric_json(const Graph& g, const Options& opt) {
  const bool on_line = opt.route == "kgraph" || opt.route == "cubic";
  const char* subject_name = on_line ? "line-graph" : "graph";
  try {
    if (opt.route == "auto") return verdict_json(g, g, certify_symmetric(g, opt.numeric, opt.tol), subject_name);
    if (opt.route == "perfect") return verdict_json(g, g, certify_symmetric_perfect(g), subject_name);
    if (opt.route == "numeric") return verdict_json(g, g, certify_symmetric_numeric(g, std::max(opt.tol, 1e-9)), subject_name);
    if (opt.route == "bipartite") {
      auto parts = bipartition(g);
      if (!parts) fail(ErrorCode::kNotBipartite, "graph has an odd cycle");
      return verdict_json(g, g, certify_symmetric_bipartite(g, *parts), subject_name);
    }
    const SymmetryVerdict v = opt.route == "kgraph" ? certify_symmetric_line_of_kgraph(g, std::max(opt.tol, 1e-6))
                                                    : certify_symmetric_bridgeless_cubic(g, std::max(opt.tol, 1e-6));
    return verdict_json(line_graph(g).graph, g, v, subject_name);
  } catch (const Error& e) {
    if (!is_precondition(e.code())) throw;
    Json out{{"subject", subject_name},
             {"verdict", std::string(to_string(Verdict::kUndecided))},
             {"route", opt.route},
             {"certificate", nullptr},
             {"reason", e.what()}};
    if (const auto* nk = dynamic_cast<const NotKGraphError*>(&e); nk && nk->witness()) {
      out["odd_cut_witness"] = Json{{"set", members(*nk->witness())}, {"cut", nk->witness_cut()}};
    }
    if (const auto* hb = dynamic_cast<const HasBridgeError*>(&e)) out["bridge"] = edge_pair(hb->bridge());
    return out;
  }
}

Json section(const std::function<Json()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvariantViolation) throw;
    return Json{{"skipped", e.what()}};
  }
}

Json report_json(const Graph& g, const Distribution& p, const Options& opt) {
  Json out;
  out["structure"] = section([&] {
    const StructureReport s = structure_queries(g);
    Json bridges = Json::array();
    for (const Edge& e : s.bridges) bridges.push_back(edge_pair(e));
    Json st{{"n", g.order()},
            {"m", g.size()},
            {"bipartite", s.parts.has_value()},
            {"components", s.components.size()},
            {"bridges", bridges},
            {"regular_degree", s.regular_degree ? Json(*s.regular_degree) : Json(nullptr)}};
    st["perfect"] = section([&] { return Json(is_perfect(g).perfect); });
    st["vertex_transitive"] = section([&] { return Json(is_vertex_transitive(g)); });
    return st;
  });
  out["entropy"] = section([&] { return entropy_json(g, p, opt); });
  out["chromatic_fractional"] = section([&] { return fractional_json(g); });
  out["edge_chromatic_fractional"] = section([&] { return edge_fractional_json(g); });
  out["chromatic_entropy"] = section([&] { return chromatic_entropy_json(g, p, opt); });
  out["bounds"] = section([&] { return bounds_json(g, p, opt); });
  Options sym = opt;
  sym.route = "auto";
  sym.numeric = true;
  out["symmetric"] = section([&] { return symmetric_json(g, sym); });
  return out;
}

void flatten(const Json& node, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, rows);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "." + std::to_string(i), rows);
  } else if (node.is_string()) {
    rows.emplace_back(path, node.get<std::string>());
  } else {
    rows.emplace_back(path, node.dump());
  }
}

void write_csv(const std::string& path, const Json& result) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(result, "", rows);
  std::ofstream file(path);
  if (!file) fail(ErrorCode::kParseError, "cannot write '" + path + "'");
  file << "key,value\n";
  for (const auto& [key, value] : rows) {
    const bool quote = value.find_first_of(",\"\n") != std::string::npos;
    std::string escaped;
    for (char c : value) escaped += c == '"' ? std::string("\"\"") : std::string(1, c);
    file << key << ',' << (quote ? "\"" + escaped + "\"" : value) << '\n';
  }
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSizeLimitExceeded: return 2;
    case ErrorCode::kInvariantViolation:
    case ErrorCode::kNonconvergence: return 3;
    default: return 1;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph entropy, fractional colourings and symmetry certificates"};
  app.name("symentropy");
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](const char* name, const char* help, bool with_dist) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", opt.graph, "builtin:<name> or edge-list file")->required();
    sub->add_option("--tol", opt.tol, "tolerance in bits")->check(CLI::PositiveNumber);
    sub->add_option("--emit-csv", opt.csv, "also write a key,value table of the result");
    sub->add_flag("--timing", opt.timing, "add wall-clock time to the report");
    if (with_dist) sub->add_option("--dist", opt.dist, "uniform, a comma list, or a file");
    return sub;
  };
  CLI::App* entropy = add_common("entropy", "graph entropy H(G,P)", true);
  entropy->add_option("--variant", opt.variant, "Frank-Wolfe variant")->check(CLI::IsMember({"away", "plain"}));
  add_common("chromatic-fractional", "exact fractional chromatic number", false);
  add_common("edge-chromatic-fractional", "exact fractional edge-chromatic number", false);
  add_common("chromatic-entropy", "minimum-entropy colouring", true);
  CLI::App* symmetric = add_common("symmetric", "decide whether the uniform distribution maximises entropy", false);
  symmetric->add_option("--route", opt.route, "auto|perfect|bipartite|kgraph|cubic|numeric")
      ->check(CLI::IsMember({"auto", "perfect", "bipartite", "kgraph", "cubic", "numeric"}));
  symmetric->add_flag("--numeric", opt.numeric, "let auto fall back to the numeric route");
  add_common("line-graph", "print L(G) as an edge list", false);
  CLI::App* report = add_common("report", "all computations as one document", true);
  report->add_option("--variant", opt.variant, "Frank-Wolfe variant")->check(CLI::IsMember({"away", "plain"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const auto start = std::chrono::steady_clock::now();
    const Graph g = load_graph(opt.graph);
    if (command == "line-graph") {
      const LineGraph line = line_graph(g);
      out << format_edge_list(line.graph);
      if (!opt.csv.empty()) {
        Json roots = Json::array();
        for (const Edge& e : g.edges()) roots.push_back(edge_pair(e));
        write_csv(opt.csv, Json{{"root_edges", roots}});
      }
      return 0;
    }

    Json result;
    if (command == "entropy") {
      result = entropy_json(g, parse_distribution(opt.dist, g.order()), opt);
    } else if (command == "chromatic-fractional") {
      result = fractional_json(g);
    } else if (command == "edge-chromatic-fractional") {
      result = edge_fractional_json(g);
    } else if (command == "chromatic-entropy") {
      result = chromatic_entropy_json(g, parse_distribution(opt.dist, g.order()), opt);
    } else if (command == "symmetric") {
      result = symmetric_json(g, opt);
    } else {
      result = report_json(g, parse_distribution(opt.dist, g.order()), opt);
    }

    char digest[32];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(input_digest(g)));
    Json doc{{"command", Json{{"name", command}, {"args", args}}},
             {"input", Json{{"graph", opt.graph}, {"n", g.order()}, {"m", g.size()}, {"digest", std::string("fnv1a64:") + digest}}},
             {"tolerance", short_number(opt.tol)},
             {"result", result}};
    if (opt.timing) {
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      doc["timing_ms"] = decimal(ms);
    }
    out << doc.dump(2) << '\n';
    if (!opt.csv.empty()) write_csv(opt.csv, result);
    return 0;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace symentropy::cli
