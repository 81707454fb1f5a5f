#include "radixplan/plan_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace radixplan {

namespace {

void check_radix_set(std::span<const int> radix_set) {
  if (radix_set.empty()) throw std::invalid_argument("empty radix set");
  for (int r : radix_set)
    if (r < 2 || !is_power_of_two(static_cast<std::size_t>(r)))
      throw std::invalid_argument("radix set entries must be powers of two >= 2");
}

}  // namespace

PlanGraph build_graph(int n, const CostTable& costs, std::span<const int> radix_set) {
  if (n < 1) throw std::invalid_argument("graph needs n >= 1");
  check_radix_set(radix_set);
  PlanGraph graph;
  graph.total_stages = n;
  for (int stage = 0; stage < n; ++stage) {
    for (int radix : radix_set) {
      const int lg = log2_exact(static_cast<std::size_t>(radix));
      if (stage + lg > n) continue;
      graph.edges.push_back({stage, stage + lg, radix, costs.at(stage, radix)});
    }
  }
  return graph;
}

std::uint64_t count_plans(int n, std::span<const int> radix_set) {
  if (n < 1) throw std::invalid_argument("count needs n >= 1");
  check_radix_set(radix_set);
  // C(n) = sum over radix log2 sizes of C(n - lg); C(0) = 1.
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int radix : radix_set) {
      const int lg = log2_exact(static_cast<std::size_t>(radix));
      if (lg <= i) c[i] += c[i - lg];
    }
  }
  return c[static_cast<std::size_t>(n)];
}

std::vector<RadixPlan> enumerate_plans(int n, std::span<const int> radix_set) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > 14) throw std::invalid_argument("enumeration too large (n > 14)");
  check_radix_set(radix_set);
  std::vector<int> sorted(radix_set.begin(), radix_set.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<RadixPlan> plans;
  std::vector<int> prefix;
  auto recurse = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      plans.push_back(RadixPlan{prefix});
      return;
    }
    for (int radix : sorted) {
      const int lg = log2_exact(static_cast<std::size_t>(radix));
      if (lg > remaining) break;
      prefix.push_back(radix);
      self(self, remaining - lg);
      prefix.pop_back();
    }
  };
  recurse(recurse, n);
  return plans;
}

PlanCost shortest_plan(const PlanGraph& graph) {
  const int n = graph.total_stages;
  if (n < 1) throw std::invalid_argument("empty graph");

  // Outgoing adjacency, radix-ascending per node so the reconstruction walk
  // below yields the lexicographically smallest tied sequence.
  std::vector<std::vector<PlanGraph::Edge>> out(static_cast<std::size_t>(n) + 1);
  for (const auto& e : graph.edges) {
    if (e.from < 0 || e.to > n || e.to <= e.from) throw std::invalid_argument("malformed edge");
    if (e.weight < 0.0) throw std::invalid_argument("negative edge weight");
    out[static_cast<std::size_t>(e.from)].push_back(e);
  }
  for (auto& edges : out)
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.radix < b.radix; });

  // Dijkstra from the sink over reversed edges: dist[s] = min cost s -> n.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(static_cast<std::size_t>(n) + 1, kInf);
  std::vector<char> done(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<PlanGraph::Edge>> in(static_cast<std::size_t>(n) + 1);
  for (const auto& e : graph.edges) in[static_cast<std::size_t>(e.to)].push_back(e);

  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[static_cast<std::size_t>(n)] = 0.0;
  queue.emplace(0.0, n);
  while (!queue.empty()) {
    const auto [d, node] = queue.top();
    queue.pop();
    if (done[static_cast<std::size_t>(node)]) continue;
    done[static_cast<std::size_t>(node)] = 1;
    for (const auto& e : in[static_cast<std::size_t>(node)]) {
      const double candidate = d + e.weight;
      if (candidate < dist[static_cast<std::size_t>(e.from)]) {
        dist[static_cast<std::size_t>(e.from)] = candidate;
        queue.emplace(candidate, e.from);
      }
    }
  }
  if (dist[0] == kInf) throw std::invalid_argument("no path from source to sink");

  // Walk forward, taking the smallest radix that stays on a shortest path.
  PlanCost result;
  int node = 0;
  while (node < n) {
    bool advanced = false;
    for (const auto& e : out[static_cast<std::size_t>(node)]) {
      const double through = e.weight + dist[static_cast<std::size_t>(e.to)];
      if (std::abs(through - dist[static_cast<std::size_t>(node)]) <= 1e-9 * (1.0 + through)) {
        result.plan.radixes.push_back(e.radix);
        result.total += e.weight;
        node = e.to;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("shortest-path reconstruction failed");
  }
  return result;
}

PlanCost plan_cost(const RadixPlan& plan, const CostTable& costs) {
  if (plan.radixes.empty()) throw std::invalid_argument("empty radix plan");
  PlanCost result;
  result.plan = plan;
  int stage = 0;
  for (int radix : plan.radixes) {
    result.total += costs.at(stage, radix);
    stage += log2_exact(static_cast<std::size_t>(radix));
  }
  if (stage != costs.n)
    throw std::invalid_argument("radix logs do not sum to log2 N (plan " + plan.str() +
                                ", log2 N = " + std::to_string(costs.n) + ")");
  return result;
}

nlohmann::json plan_to_json(int n, const PlanCost& result) {
  nlohmann::json j;
  j["n"] = n;
  j["plan"] = result.plan.radixes;
  j["total_cost"] = result.total;
  return j;
}

PlanCost plan_from_json(const nlohmann::json& j, int* n_out) {
  PlanCost result;
  result.plan.radixes = j.at("plan").get<std::vector<int>>();
  result.total = j.at("total_cost").get<double>();
  if (n_out) *n_out = j.at("n").get<int>();
  return result;
}

}  // namespace radixplan
