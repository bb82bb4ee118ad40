#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

#include "acq/graph.hpp"

namespace acq {

// The one random engine used across the project. Always explicitly seeded.
using Rng = std::mt19937_64;

// Seed for an independent sub-stream, e.g. one benchmark trial.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0);

// Uniform integer in [0, bound) by rejection; identical across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
// Uniform double in [0, 1) from the top 53 bits.
double uniform_unit(Rng& rng);

// Labeled tree encoded by a Prüfer sequence of length n-2 over 0..n-1.
Graph tree_from_prufer(std::size_t n, std::span<const Vertex> sequence);

Graph random_tree(std::size_t n, std::uint64_t seed);

// Uniform random labeled tree plus `extra_edges` additional random edges.
Graph random_connected(std::size_t n, std::size_t extra_edges, std::uint64_t seed);

// Largest connected component of G(n, p), relabeled to 0..k-1 in original id
// order. Ties between equal-size components go to the one with the smallest id.
Graph gnp_giant_component(std::size_t n, double p, std::uint64_t seed);

}  // namespace acq
