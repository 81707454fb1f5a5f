#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "radixplan/cost_model.hpp"
#include "radixplan/fft.hpp"

namespace radixplan {

/// The radix set every figure in the reference data uses.
inline constexpr int kDefaultRadixSet[] = {2, 4, 8};

/// DAG over stage indices 0..n; an edge (s -> s + log2 r) carries the cost of
/// a radix-r pass starting at stage s. Every source->sink path is a valid
/// mixed-radix schedule. Immutable after build_graph.
struct PlanGraph {
  struct Edge {
    int from = 0;
    int to = 0;
    int radix = 0;
    double weight = 0.0;
  };
  int total_stages = 0;
  std::vector<Edge> edges;
};

struct PlanCost {
  RadixPlan plan;
  double total = 0.0;
};

/// Builds the stage DAG for a 2^n transform; requires a cost entry for every
/// (s, r) with s + log2 r <= n.
PlanGraph build_graph(int n, const CostTable& costs,
                      std::span<const int> radix_set = kDefaultRadixSet);

/// Number of distinct source->sink paths: compositions of n into the radix
/// log2 parts ({1,2,3} by default).
std::uint64_t count_plans(int n, std::span<const int> radix_set = kDefaultRadixSet);

/// All valid plans in lexicographic radix order. Guarded to n <= 14.
std::vector<RadixPlan> enumerate_plans(int n, std::span<const int> radix_set = kDefaultRadixSet);

/// Minimum-total-cost path via Dijkstra; ties broken by the lexicographically
/// smallest radix sequence.
PlanCost shortest_plan(const PlanGraph& graph);

/// Sum of stage-indexed costs along the plan.
PlanCost plan_cost(const RadixPlan& plan, const CostTable& costs);

/// {"n": ..., "plan": [...], "total_cost": ...}
nlohmann::json plan_to_json(int n, const PlanCost& result);
PlanCost plan_from_json(const nlohmann::json& j, int* n_out = nullptr);

}  // namespace radixplan
