#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symentropy/combinatorics.hpp"
#include "symentropy/entropy.hpp"
#include "symentropy/errors.hpp"
#include "symentropy/graph.hpp"
#include "symentropy/rational.hpp"

namespace symentropy {

inline constexpr int kPerfectCap = 14;

// Not k-graph, with the odd set whose cut falls below the degree when the
// graph is at least regular.
class NotKGraphError : public Error {
 public:
  NotKGraphError(const std::string& message, std::optional<VertexSet> witness, int witness_cut)
      : Error(ErrorCode::kNotKGraph, message), witness_(witness), witness_cut_(witness_cut) {}
  const std::optional<VertexSet>& witness() const noexcept { return witness_; }
  int witness_cut() const noexcept { return witness_cut_; }

 private:
  std::optional<VertexSet> witness_;
  int witness_cut_;
};

class HasBridgeError : public Error {
 public:
  HasBridgeError(const std::string& message, Edge bridge) : Error(ErrorCode::kHasBridge, message), bridge_(bridge) {}
  Edge bridge() const noexcept { return bridge_; }

 private:
  Edge bridge_;
};

struct PerfectTest {
  bool perfect = true;
  // Vertices of an induced odd cycle (length >= 5) in cyclic order, taken in
  // the complement when in_complement is set.
  std::vector<Vertex> witness;
  bool in_complement = false;
};

PerfectTest is_perfect(const Graph& g);

enum class Verdict { kSymmetric, kNotSymmetric, kUndecided };
enum class Route { kPerfectCover, kBipartiteMatching, kVertexTransitive, kKGraphLine, kNumeric, kNone };

std::string_view to_string(Verdict v);
std::string_view to_string(Route r);

struct NumericPair {
  double entropy_bits = 0.0;  // H(G,U)
  double gap_bits = 0.0;
  Rational chi_f;
  double log_chi_f_bits = 0.0;
};

struct VertexTransitiveNote {
  int alpha = 0;
  double log_ratio_bits = 0.0;  // log2(n / alpha)
};

using Certificate = std::variant<std::monostate, CliqueCover, std::vector<Edge>, KktCertificate,
                                 VertexTransitiveNote, NumericPair>;

// Independent set S with |S| > n/omega and the objective of the uniform
// distribution at x_bar (|S|/n on S, the rest spread over omega - 1).
struct Counterexample {
  VertexSet independent_set;
  std::optional<VertexSet> hall_set;  // bipartite route: D with |N(D)| < |D|
  std::vector<double> point;
  double bound_bits = 0.0;
  double log_omega_bits = 0.0;
};

struct SymmetryVerdict {
  Verdict verdict = Verdict::kUndecided;
  Route route = Route::kNone;
  Certificate certificate;
  std::optional<Counterexample> counterexample;
  std::string reason;  // why no route decided, for kUndecided
};

SymmetryVerdict certify_symmetric_perfect(const Graph& g);
SymmetryVerdict certify_symmetric_bipartite(const Graph& g, const Bipartition& parts);
// Decides symmetry of L(g1).
SymmetryVerdict certify_symmetric_line_of_kgraph(const Graph& g1, double tol = 1e-6);
SymmetryVerdict certify_symmetric_bridgeless_cubic(const Graph& g1, double tol = 1e-6);
SymmetryVerdict certify_symmetric_vertex_transitive(const Graph& g);
SymmetryVerdict certify_symmetric_numeric(const Graph& g, double tol = 1e-6);

// Tries bipartite, perfect and vertex-transitive in that order; falls back
// to the numeric route only when allowed, otherwise reports undecided.
SymmetryVerdict certify_symmetric(const Graph& g, bool allow_numeric, double tol = 1e-6);

}  // namespace symentropy
