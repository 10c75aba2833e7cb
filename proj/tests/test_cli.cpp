#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "symentropy/builtins.hpp"
#include "symentropy/cli.hpp"
#include "symentropy/combinatorics.hpp"
#include "symentropy/errors.hpp"
#include "symentropy/fractional.hpp"

using namespace symentropy;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  auto r = invoke(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

ErrorCode parse_code(const std::string& text) {
  std::istringstream in(text);
  try {
    cli::parse_edge_list(in);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::kInvariantViolation;
}

std::string parse_message(const std::string& text) {
  std::istringstream in(text);
  try {
    cli::parse_edge_list(in);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

VertexSet to_set(const json& members) {
  VertexSet s;
  for (int v : members) s = s | VertexSet{v};
  return s;
}

double num(const json& j) { return std::stod(j.get<std::string>()); }

}  // namespace

TEST(EdgeList, ParsesWithCommentsAndBlankLines) {
  std::istringstream in("# a path\n4 3\n\n0 1\n1 2  # middle\n2 3\n");
  Graph g = cli::parse_edge_list(in);
  EXPECT_EQ(g, builtins::path(4));
}

TEST(EdgeList, RoundTrip) {
  for (const char* name : {"petersen", "fig3", "c4c6", "k3_3"}) {
    Graph g = builtins::by_name(name);
    std::istringstream in(cli::format_edge_list(g));
    EXPECT_EQ(cli::parse_edge_list(in), g) << name;
  }
}

TEST(EdgeList, Errors) {
  EXPECT_EQ(parse_code(""), ErrorCode::kParseError);
  EXPECT_EQ(parse_code("3 1\n0 3\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_code("3 1\n1 1\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_code("3 2\n0 1\n1 0\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_code("3 2\n0 1\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_code("3 1\n0 x\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_code("65 0\n"), ErrorCode::kSizeLimitExceeded);
  EXPECT_NE(parse_message("# header next\n3 2\n0 1\n1 0\n").find("line 4"), std::string::npos);
}

TEST(LoadGraph, BuiltinShapes) {
  auto shape = [](const std::string& name) {
    Graph g = cli::load_graph("builtin:" + name);
    return std::pair{g.order(), g.size()};
  };
  EXPECT_EQ(shape("petersen"), (std::pair{10, 15}));
  EXPECT_EQ(shape("fig2"), (std::pair{6, 9}));
  EXPECT_EQ(shape("fig3"), (std::pair{10, 15}));
  EXPECT_EQ(shape("c4c6"), (std::pair{10, 10}));
  EXPECT_EQ(shape("k3_3"), (std::pair{6, 9}));
  EXPECT_EQ(shape("k2_2_2"), (std::pair{6, 12}));
  EXPECT_EQ(shape("star7"), (std::pair{8, 7}));
  EXPECT_EQ(shape("k5"), (std::pair{5, 10}));
  EXPECT_EQ(shape("c7"), (std::pair{7, 7}));
  EXPECT_EQ(shape("path4"), (std::pair{4, 3}));
  EXPECT_EQ(shape("empty3"), (std::pair{3, 0}));
  EXPECT_THROW(cli::load_graph("builtin:dodecahedron"), Error);
}

TEST(Distribution, Parsing) {
  auto u = cli::parse_distribution("uniform", 5);
  ASSERT_TRUE(u.exact());
  for (const Rational& w : u.exact_weights()) EXPECT_EQ(w, make_rational(1, 5));

  auto exact = cli::parse_distribution("1/8,1/4,3/8,1/4", 4);
  ASSERT_TRUE(exact.exact());
  EXPECT_EQ(exact.exact_weights()[2], make_rational(3, 8));

  auto floats = cli::parse_distribution("0.5, 0.25, 0.25", 3);
  EXPECT_FALSE(floats.exact());
  EXPECT_DOUBLE_EQ(floats[0], 0.5);

  auto code_of = [](const std::string& text, int n) {
    try {
      cli::parse_distribution(text, n);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvariantViolation;
  };
  EXPECT_EQ(code_of("0.3,0.3,0.3", 3), ErrorCode::kSumNotOne);
  EXPECT_EQ(code_of("1/2,1/4", 3), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of("1.5,-0.5", 2), ErrorCode::kNegativeEntry);
  EXPECT_EQ(code_of("1/3,1/3,1/2", 3), ErrorCode::kSumNotOne);
}

TEST(Distribution, FromFile) {
  auto path = std::filesystem::temp_directory_path() / "symentropy_dist_test.txt";
  {
    std::ofstream f(path);
    f << "1/2,1/2\n";
  }
  auto d = cli::parse_distribution(path.string(), 2);
  EXPECT_TRUE(d.exact());
  std::filesystem::remove(path);
}

TEST(Digest, StableAndSensitive) {
  EXPECT_EQ(cli::input_digest(builtins::petersen()), cli::input_digest(builtins::petersen()));
  EXPECT_NE(cli::input_digest(builtins::cycle(5)), cli::input_digest(builtins::path(5)));
}

TEST(Run, DocumentShape) {
  json doc = invoke_json({"entropy", "builtin:c4c6"});
  EXPECT_EQ(doc["command"]["name"], "entropy");
  EXPECT_EQ(doc["input"]["n"], 10);
  EXPECT_EQ(doc["input"]["m"], 10);
  EXPECT_EQ(doc["input"]["digest"].get<std::string>().rfind("fnv1a64:", 0), 0U);
  EXPECT_EQ(doc["result"]["value"]["unit"], "bits");
  EXPECT_NEAR(num(doc["result"]["value"]["value"]), 1.0, 1e-9);
  EXPECT_FALSE(doc.contains("timing_ms"));
  EXPECT_TRUE(invoke_json({"entropy", "builtin:c4", "--timing"}).contains("timing_ms"));
}

TEST(Run, KGraphCertificate) {
  json doc = invoke_json({"symmetric", "builtin:petersen", "--route", "kgraph"});
  const json& r = doc["result"];
  EXPECT_EQ(r["subject"], "line-graph");
  EXPECT_EQ(r["verdict"], "symmetric");
  EXPECT_EQ(r["route"], "k-graph-line");
  EXPECT_EQ(r["certificate"]["type"], "kkt");
  EXPECT_EQ(r["certificate"]["x_exact"], "1/3");
  EXPECT_EQ(r["certificate"]["lambda_exact"], "1/10");
  EXPECT_LE(num(r["certificate"]["max_stationarity_residual"]), 1e-12);
}

TEST(Run, PreconditionFailureIsUndecided) {
  auto r = invoke({"symmetric", "builtin:fig3", "--route", "cubic"});
  ASSERT_EQ(r.code, 0);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["result"]["verdict"], "undecided-by-theorems");
  EXPECT_EQ(doc["result"]["bridge"], (json{4, 5}));

  json kg = invoke_json({"symmetric", "builtin:fig3", "--route", "kgraph"});
  EXPECT_EQ(kg["result"]["verdict"], "undecided-by-theorems");
  EXPECT_TRUE(kg["result"].contains("odd_cut_witness"));
}

TEST(Run, CliqueCoverRevalidates) {
  json doc = invoke_json({"symmetric", "builtin:k3_3", "--route", "perfect"});
  const json& cert = doc["result"]["certificate"];
  ASSERT_EQ(cert["type"], "clique-cover");
  CliqueCover cover;
  for (const json& c : cert["cliques"]) cover.push_back(to_set(c));
  EXPECT_TRUE(is_valid_clique_cover(builtins::complete_multipartite({3, 3}), cover, 2));
}

TEST(Run, CounterexampleReported) {
  json doc = invoke_json({"symmetric", "builtin:path3", "--route", "perfect"});
  EXPECT_EQ(doc["result"]["verdict"], "not-symmetric");
  EXPECT_TRUE(doc["result"]["certificate"].is_null());
  EXPECT_TRUE(doc["result"].contains("counterexample"));
}

TEST(Run, FractionalColoringRevalidates) {
  json doc = invoke_json({"chromatic-fractional", "builtin:c5"});
  const json& r = doc["result"];
  EXPECT_EQ(r["value"]["exact"], "5/2");
  FractionalColoring coloring;
  for (const json& entry : r["coloring"]) {
    coloring.emplace_back(to_set(entry["set"]), parse_rational(entry["weight"]));
  }
  EXPECT_TRUE(is_valid_fractional_coloring(builtins::cycle(5), coloring, make_rational(5, 2)));
}

TEST(Run, ChromaticEntropyCells) {
  json doc = invoke_json({"chromatic-entropy", "builtin:c5", "--dist", "0.3,0.2,0.2,0.1,0.2"});
  EXPECT_NEAR(num(doc["result"]["value"]["value"]), 1.360964, 1e-6);
  EXPECT_EQ(doc["result"]["cells"], (json{{0, 2}, {1, 4}, {3}}));
}

TEST(Run, LineGraphParsesBack) {
  auto r = invoke({"line-graph", "builtin:k4"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  Graph l = cli::parse_edge_list(in);
  EXPECT_EQ(l.order(), 6);
  EXPECT_EQ(l.size(), 12);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(l.degree(v), 4);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(invoke({"entropy", "no-such-file"}).code, 1);
  EXPECT_EQ(invoke({"frobnicate"}).code, 1);
  EXPECT_EQ(invoke({"chromatic-entropy", "builtin:c30"}).code, 2);
  EXPECT_EQ(invoke({"entropy", "builtin:petersen", "--variant", "plain", "--tol", "1e-13"}).code, 3);
}

TEST(Run, ReportIsDeterministic) {
  auto a = invoke({"report", "builtin:fig2"});
  auto b = invoke({"report", "builtin:fig2"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  json doc = json::parse(a.out);
  for (const char* section : {"structure", "entropy", "chromatic_fractional", "edge_chromatic_fractional",
                              "chromatic_entropy", "bounds", "symmetric"}) {
    EXPECT_TRUE(doc["result"].contains(section)) << section;
  }
}

TEST(Run, EmitCsv) {
  auto path = std::filesystem::temp_directory_path() / "symentropy_cli_test.csv";
  std::filesystem::remove(path);
  ASSERT_EQ(invoke({"entropy", "builtin:c5", "--emit-csv", path.string()}).code, 0);
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "key,value");
  std::string body((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_NE(body.find("value.value,"), std::string::npos);
  std::filesystem::remove(path);
}
