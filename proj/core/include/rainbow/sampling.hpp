#pragma once

#include <cstdint>
#include <random>

#include "rainbow/graph.hpp"

namespace rainbow {

using Rng = std::mt19937_64;

/// Independent stream for sample `index` of a campaign seeded with `seed`;
/// lets parallel workers reproduce the serial draw order.
Rng stream_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform labeled graph on n vertices with exactly m edges.
Graph random_graph_with_edges(int n, int m, Rng& rng);

/// Each of the C(n,2) pairs present independently with probability p.
Graph random_graph(int n, double p, Rng& rng);

/// Edge count uniform in [lo, hi], then a uniform graph with that count.
Graph random_graph_in_size_range(int n, int lo, int hi, Rng& rng);

/// Uniformly relabeled K1 v (K_{n-2} u K1).
Graph random_extremal_graph(int n, Rng& rng);

/// Family of n independent draws from random_graph(n, p).
GraphFamily random_family(int n, double p, Rng& rng);

}  // namespace rainbow
