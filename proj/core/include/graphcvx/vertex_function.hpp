#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphcvx/graph.hpp"

namespace graphcvx {

// Total map from vertex ids to R ∪ {+inf}. Rejects NaN and -inf.
class VertexFunction {
public:
    VertexFunction() = default;
    explicit VertexFunction(std::size_t size, double fill = 0.0);
    explicit VertexFunction(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator()(VertexId v) const { return at(v); }
    double at(VertexId v) const;
    void set(VertexId v, double value);

    std::span<const double> values() const { return values_; }

    friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

private:
    std::vector<double> values_;
};

}  // namespace graphcvx
