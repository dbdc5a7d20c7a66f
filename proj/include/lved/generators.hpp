#ifndef LVED_GENERATORS_HPP
#define LVED_GENERATORS_HPP

#include <cstdint>

#include "lved/graph.hpp"
#include "lved/interval.hpp"
#include "lved/threedm.hpp"

namespace lved {

/// Connected block graph built by repeatedly attaching a clique of size
/// 2..max_block_size at a random existing vertex.
Graph gen_block_graph(std::uint64_t seed, int n, int max_block_size = 5);

/// Connected proper interval graph with its representation: n unit-length
/// intervals at distinct left endpoints, resampled until connected.
std::pair<Graph, IntervalRepresentation> gen_proper_interval(std::uint64_t seed, int n,
                                                             double spread = 3.0);

/// Erdos-Renyi G(n, p).
Graph gen_random_graph(std::uint64_t seed, int n, double edge_prob);

/// Random 3-DM instance with q elements per coordinate and p distinct
/// triples; when planted, the first q triples form a perfect matching.
ThreeDMInstance gen_3dm(std::uint64_t seed, int q, int p, bool planted);

}  // namespace lved

#endif
