#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "graphcvx/graph.hpp"

namespace graphcvx {

// Subset of the vertex ids 0..universe()-1. Binary operations require equal
// universes and throw std::invalid_argument otherwise.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
    VertexSet(std::size_t universe, std::initializer_list<VertexId> members);
    VertexSet(std::size_t universe, std::span<const VertexId> members);

    static VertexSet all(std::size_t universe);
    // Bit i of mask selects vertex i. universe <= 64.
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

    std::size_t universe() const { return bits_.size(); }
    std::size_t size() const;
    bool empty() const { return size() == 0; }

    bool contains(VertexId v) const;
    void insert(VertexId v);
    void erase(VertexId v);

    std::vector<VertexId> members() const;
    std::uint64_t mask() const;

    bool is_subset_of(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void check(VertexId v) const;
    void check_same_universe(const VertexSet& other) const;

    std::vector<bool> bits_;
};

}  // namespace graphcvx
