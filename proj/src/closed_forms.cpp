#include "symentropy/closed_forms.hpp"

#include <cmath>
#include <limits>

#include "symentropy/constructions.hpp"
#include "symentropy/errors.hpp"

namespace symentropy {

double complete_graph_entropy(const Distribution& p) { return shannon_entropy(p); }

double multipartite_entropy(const Graph& g, const Distribution& p) {
  if (p.size() != g.order()) fail(ErrorCode::kDimensionMismatch, "distribution length differs from vertex count");
  const Graph co = complement(g);
  std::vector<double> aggregate;
  for (const auto& part : connected_components(co)) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j) {
        if (g.adjacent(part[i], part[j])) {
          fail(ErrorCode::kNotCompleteMultipartite, "complement is not a disjoint union of cliques");
        }
      }
    }
    double mass = 0.0;
    for (Vertex v : part) mass += p[v];
    aggregate.push_back(mass);
  }
  return shannon_entropy(aggregate);
}

ComponentsEntropy components_entropy(const Graph& g, const Distribution& p, const EntropyOptions& options) {
  if (p.size() != g.order()) fail(ErrorCode::kDimensionMismatch, "distribution length differs from vertex count");
  ComponentsEntropy out;
  for (auto& part : connected_components(g)) {
    ComponentEntropy c;
    for (Vertex v : part) c.mass += p[v];
    if (c.mass > 0.0) {
      auto result = graph_entropy(induced_subgraph(g, part), p.conditioned_on(part), options);
      c.value_bits = result.value_bits;
      c.gap_bits = result.gap_bits;
      out.value_bits += c.mass * c.value_bits;
      out.gap_bits += c.mass * c.gap_bits;
    }
    c.vertices = std::move(part);
    out.components.push_back(std::move(c));
  }
  return out;
}

namespace {

constexpr int kBipartiteCap = 20;
constexpr int kPartitionSearchCap = 8;

template <class T>
struct MassOps;

template <>
struct MassOps<double> {
  static bool greater(double a, double b) { return a > b + 1e-12; }
};

template <>
struct MassOps<Rational> {
  static bool greater(const Rational& a, const Rational& b) { return a > b; }
};

template <class T>
class BipartiteMasses {
 public:
  BipartiteMasses(const Graph& g, std::vector<T> weights) : g_(g), w_(std::move(weights)) {}

  T mass(VertexSet s) const {
    T total(0);
    s.for_each([&](Vertex v) { total += w_[v]; });
    return total;
  }

  VertexSet neighbours(VertexSet d, VertexSet within) const {
    VertexSet out;
    d.for_each([&](Vertex v) { out |= g_.neighbor_set(v); });
    return out & within;
  }

  // n1/d1 > n2/d2 for nonnegative masses, with x/0 (x > 0) as infinity.
  static bool ratio_greater(const T& n1, const T& d1, const T& n2, const T& d2) {
    return MassOps<T>::greater(n1 * d2, n2 * d1);
  }

  // First D (submask order) violating P(D)P(B) <= P(N(D))P(A).
  std::optional<VertexSet> find_violation(VertexSet a, VertexSet b) const {
    const T pa = mass(a);
    const T pb = mass(b);
    for (std::uint64_t sub = a.bits(); sub != 0; sub = (sub - 1) & a.bits()) {
      VertexSet d(sub);
      if (MassOps<T>::greater(mass(d) * pb, mass(neighbours(d, b)) * pa)) return d;
    }
    return std::nullopt;
  }

  // Repeatedly splits off the largest D maximising P(D)/P(N(D)) inside the
  // remaining graph, until the neighbourhood condition holds on the rest.
  std::vector<std::pair<VertexSet, VertexSet>> peel(VertexSet a, VertexSet b) const {
    std::vector<std::pair<VertexSet, VertexSet>> blocks;
    while (!a.empty()) {
      const T pa = mass(a);
      if (!MassOps<T>::greater(pa, T(0)) || !find_violation(a, b)) break;
      std::optional<std::pair<T, T>> best;
      for (std::uint64_t sub = a.bits(); sub != 0; sub = (sub - 1) & a.bits()) {
        VertexSet d(sub);
        T pd = mass(d);
        if (!MassOps<T>::greater(pd, T(0))) continue;
        T pn = mass(neighbours(d, b));
        if (!best || ratio_greater(pd, pn, best->first, best->second)) best = std::make_pair(pd, pn);
      }
      VertexSet densest;
      for (std::uint64_t sub = a.bits(); sub != 0; sub = (sub - 1) & a.bits()) {
        VertexSet d(sub);
        T pd = mass(d);
        if (!MassOps<T>::greater(pd, T(0))) continue;
        T pn = mass(neighbours(d, b));
        if (!ratio_greater(best->first, best->second, pd, pn)) densest |= d;
      }
      VertexSet hood = neighbours(densest, b);
      // zero-mass vertices whose neighbourhood is already covered join too
      (a - densest).for_each([&](Vertex v) {
        if (!MassOps<T>::greater(w_[v], T(0)) && neighbours(VertexSet{v}, b).is_subset_of(hood)) densest.insert(v);
      });
      blocks.emplace_back(densest, hood);
      a -= densest;
      b -= hood;
    }
    if (!a.empty() || !b.empty()) blocks.emplace_back(a, b);
    return blocks;
  }

 private:
  const Graph& g_;
  std::vector<T> w_;
};

double block_value(const Distribution& p, VertexSet d, VertexSet u) {
  const double pd = p.mass(d);
  const double total = pd + p.mass(u);
  if (total <= 0.0) return 0.0;
  return total * binary_entropy(std::clamp(pd / total, 0.0, 1.0));
}

std::vector<Vertex> to_vector(VertexSet s) { return s.members(); }

BipartiteEntropyReport blocks_report(const Distribution& p,
                                     const std::vector<std::pair<VertexSet, VertexSet>>& blocks) {
  BipartiteEntropyReport report;
  report.case_tag = KornerMartonCase::kPartition;
  for (const auto& [d, u] : blocks) {
    double contribution = block_value(p, d, u);
    report.blocks.push_back(BipartiteBlock{to_vector(d), to_vector(u), contribution});
    report.value_bits += contribution;
  }
  return report;
}

// Ordered partitions D_1..D_k of A with U_i = N(D_i) minus earlier U's;
// returns the smallest formula value among those whose induced point
// (P(D_i)/P(D_i u U_i) on D_i, its complement on U_i) satisfies every edge
// inequality.
std::optional<std::vector<std::pair<VertexSet, VertexSet>>> exhaustive_blocks(const Graph& g, const Distribution& p,
                                                                              VertexSet a, VertexSet b) {
  std::vector<std::pair<VertexSet, VertexSet>> current;
  std::optional<std::vector<std::pair<VertexSet, VertexSet>>> best;
  double best_value = std::numeric_limits<double>::infinity();
  auto share = [&](VertexSet d, VertexSet u) {
    double pd = p.mass(d);
    double total = pd + p.mass(u);
    return total > 0.0 ? pd / total : 1.0;
  };
  auto feasible = [&]() {
    std::vector<double> level(g.order(), 0.0);
    for (const auto& [d, u] : current) {
      double r = share(d, u);
      d.for_each([&](Vertex v) { level[v] = r; });
      u.for_each([&](Vertex v) { level[v] = 1.0 - r; });
    }
    for (const Edge& e : g.edges()) {
      if (level[e.u] + level[e.v] > 1.0 + 1e-12) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, VertexSet rest_a, VertexSet rest_b) -> void {
    if (rest_a.empty()) {
      if (!rest_b.empty() || !feasible()) return;
      double value = 0.0;
      for (const auto& [d, u] : current) value += block_value(p, d, u);
      if (value < best_value) {
        best_value = value;
        best = current;
      }
      return;
    }
    for (std::uint64_t sub = rest_a.bits(); sub != 0; sub = (sub - 1) & rest_a.bits()) {
      VertexSet d(sub);
      VertexSet hood;
      d.for_each([&](Vertex v) { hood |= g.neighbor_set(v); });
      hood &= rest_b;
      current.emplace_back(d, hood);
      self(self, rest_a - d, rest_b - hood);
      current.pop_back();
    }
  };
  recurse(recurse, a, b);
  return best;
}

}  // namespace

BipartiteEntropyReport korner_marton_entropy(const Graph& g, const Bipartition& parts, const Distribution& p,
                                             double match_tolerance) {
  if (p.size() != g.order()) fail(ErrorCode::kDimensionMismatch, "distribution length differs from vertex count");
  if (g.order() > kBipartiteCap) fail(ErrorCode::kSizeLimitExceeded, "bipartite closed form is capped at 20 vertices");
  neighborhood(g, parts, {});
  if (static_cast<int>(parts.a.size() + parts.b.size()) != g.order()) {
    fail(ErrorCode::kNotBipartite, "parts do not cover the vertex set");
  }
  if (!isolated_vertices(g).empty()) fail(ErrorCode::kIsolatedVertex, "graph has an isolated vertex");
  const VertexSet a = VertexSet::from_members(parts.a);
  const VertexSet b = VertexSet::from_members(parts.b);
  if (!(p.mass(a) > 0.0) || !(p.mass(b) > 0.0)) fail(ErrorCode::kDomainError, "both parts need positive mass");

  std::optional<VertexSet> violation;
  std::vector<std::pair<VertexSet, VertexSet>> peeled;
  if (p.exact()) {
    BipartiteMasses<Rational> masses(g, p.exact_weights());
    violation = masses.find_violation(a, b);
    if (violation) peeled = masses.peel(a, b);
  } else {
    BipartiteMasses<double> masses(g, std::vector<double>(p.weights().begin(), p.weights().end()));
    violation = masses.find_violation(a, b);
    if (violation) peeled = masses.peel(a, b);
  }
  if (!violation) {
    BipartiteEntropyReport report;
    report.case_tag = KornerMartonCase::kNeighborhoodCondition;
    report.value_bits = binary_entropy(std::clamp(p.mass(a), 0.0, 1.0));
    return report;
  }

  const EntropyResult solved = graph_entropy(g, p);
  auto matches = [&](double value) {
    return std::abs(value - solved.value_bits) <= match_tolerance + solved.gap_bits;
  };
  BipartiteEntropyReport report = blocks_report(p, peeled);
  if (!matches(report.value_bits)) {
    if (parts.a.size() > kPartitionSearchCap || parts.b.size() > kPartitionSearchCap) {
      fail(ErrorCode::kPartitionNotFound, "direct reconstruction missed and the exhaustive search is capped at 8 per side");
    }
    auto searched = exhaustive_blocks(g, p, a, b);
    if (!searched) fail(ErrorCode::kPartitionNotFound, "no feasible block pairing");
    report = blocks_report(p, *searched);
    if (!matches(report.value_bits)) {
      fail(ErrorCode::kPartitionNotFound, "best block pairing gives " + std::to_string(report.value_bits) +
                                              " against solver value " + std::to_string(solved.value_bits));
    }
  }
  report.violating_set = violation->members();
  report.solver_value_bits = solved.value_bits;
  return report;
}

std::optional<BipartiteEntropyReport> korner_marton_condition_either_side(const Graph& g, const Bipartition& parts,
                                                                          const Distribution& p) {
  for (const Bipartition& oriented : {parts, Bipartition{parts.b, parts.a}}) {
    auto report = korner_marton_entropy(g, oriented, p);
    if (report.case_tag == KornerMartonCase::kNeighborhoodCondition) return report;
  }
  return std::nullopt;
}

}  // namespace symentropy
