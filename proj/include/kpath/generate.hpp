#pragma once

#include <cstdint>
#include <string_view>

#include "kpath/graph.hpp"

namespace kpath {

// Benchmark / test instance generators. All are deterministic in the seed.
//
//   hampath: a random permutation path (guaranteed k-path for k <= n)
//            plus density-p noise edges.
//   random:  G(n, p), each unordered pair independently with probability p.
//   grid:    rectangular grid graph on n vertices (p unused).
Graph generate_instance(std::string_view kind, int n, double p, std::uint64_t seed);

}  // namespace kpath
