#pragma once

#include <cstddef>
#include <functional>
#include <random>

#include "graphcvx/group_lattice.hpp"
#include "graphcvx/vertex_function.hpp"
#include "graphcvx/vertex_set.hpp"

namespace graphcvx {

// Independent uniform integer values in [lo, hi].
VertexFunction uniform_function(std::size_t size, int lo, int hi, std::mt19937_64& rng);

// Each vertex kept with probability 1/2.
VertexSet random_vertex_set(std::size_t universe, std::mt19937_64& rng);

// max over k in [1, max_terms] of <c, x> + b with integer c_i in [-3, 3] and
// b in [-5, 5]. Midpoint convex on any lattice by construction.
VertexFunction max_affine_function(const GroupLattice& lattice, std::mt19937_64& rng, std::size_t max_terms = 4);

// Calls visit once per function from `size` vertices into {lo, ..., hi},
// in odometer order with vertex 0 varying slowest.
void for_each_function(std::size_t size, int lo, int hi, const std::function<void(const VertexFunction&)>& visit);

}  // namespace graphcvx
