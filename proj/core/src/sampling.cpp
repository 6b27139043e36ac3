#include "graphcvx/sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace graphcvx {

VertexFunction uniform_function(std::size_t size, int lo, int hi, std::mt19937_64& rng) {
    if (lo > hi) throw std::invalid_argument("empty value range");
    std::uniform_int_distribution<int> value(lo, hi);
    VertexFunction f(size);
    for (VertexId v = 0; v < size; ++v) f.set(v, value(rng));
    return f;
}

VertexSet random_vertex_set(std::size_t universe, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    VertexSet s(universe);
    for (VertexId v = 0; v < universe; ++v) {
        if (coin(rng)) s.insert(v);
    }
    return s;
}

VertexFunction max_affine_function(const GroupLattice& lattice, std::mt19937_64& rng, std::size_t max_terms) {
    if (max_terms == 0) throw std::invalid_argument("need at least one affine term");
    const std::size_t n = lattice.spec().dimension;
    std::uniform_int_distribution<std::size_t> terms(1, max_terms);
    std::uniform_int_distribution<int> slope(-3, 3);
    std::uniform_int_distribution<int> offset(-5, 5);

    struct Affine {
        std::vector<int> slope;
        int offset;
    };
    std::vector<Affine> forms(terms(rng));
    for (auto& form : forms) {
        form.slope.resize(n);
        for (auto& c : form.slope) c = slope(rng);
        form.offset = offset(rng);
    }

    VertexFunction f(lattice.vertex_count());
    for (VertexId v = 0; v < lattice.vertex_count(); ++v) {
        const Point& p = lattice.point(v);
        double best = -kInfinity;
        for (const auto& form : forms) {
            double value = form.offset;
            for (std::size_t i = 0; i < n; ++i) value += static_cast<double>(form.slope[i] * p[i]);
            best = std::max(best, value);
        }
        f.set(v, best);
    }
    return f;
}

void for_each_function(std::size_t size, int lo, int hi, const std::function<void(const VertexFunction&)>& visit) {
    if (lo > hi) throw std::invalid_argument("empty value range");
    std::vector<double> values(size, lo);
    while (true) {
        visit(VertexFunction(values));
        std::size_t i = size;
        while (true) {
            if (i == 0) return;
            --i;
            if (values[i] < hi) {
                values[i] += 1;
                break;
            }
            values[i] = lo;
        }
    }
}

}  // namespace graphcvx
