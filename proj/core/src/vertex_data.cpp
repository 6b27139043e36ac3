#include "graphcvx/vertex_set.hpp"

#include <stdexcept>
#include <string>

#include "graphcvx/extended_real.hpp"
#include "graphcvx/vertex_function.hpp"

namespace graphcvx {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
    : VertexSet(universe, std::span<const VertexId>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> members) : bits_(universe, false) {
    for (VertexId v : members) insert(v);
}

VertexSet VertexSet::all(std::size_t universe) {
    VertexSet s(universe);
    s.bits_.assign(universe, true);
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("from_mask supports at most 64 vertices");
    VertexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.bits_[i] = ((mask >> i) & 1U) != 0;
    return s;
}

std::size_t VertexSet::size() const {
    std::size_t n = 0;
    for (bool b : bits_) n += b ? 1 : 0;
    return n;
}

bool VertexSet::contains(VertexId v) const {
    check(v);
    return bits_[v];
}

void VertexSet::insert(VertexId v) {
    check(v);
    bits_[v] = true;
}

void VertexSet::erase(VertexId v) {
    check(v);
    bits_[v] = false;
}

std::vector<VertexId> VertexSet::members() const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) out.push_back(i);
    }
    return out;
}

std::uint64_t VertexSet::mask() const {
    if (bits_.size() > 64) throw std::invalid_argument("mask supports at most 64 vertices");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) m |= std::uint64_t{1} << i;
    }
    return m;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !other.bits_[i]) return false;
    }
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = bits_[i] || other.bits_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = bits_[i] && other.bits_[i];
    return *this;
}

void VertexSet::check(VertexId v) const {
    if (v >= bits_.size()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside set universe of size " +
                                std::to_string(bits_.size()));
    }
}

void VertexSet::check_same_universe(const VertexSet& other) const {
    if (other.bits_.size() != bits_.size()) throw std::invalid_argument("vertex sets over different universes");
}

VertexFunction::VertexFunction(std::size_t size, double fill) {
    if (!is_extended_real(fill)) throw std::invalid_argument("function values must be finite or +inf");
    values_.assign(size, fill);
}

VertexFunction::VertexFunction(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_) {
        if (!is_extended_real(v)) throw std::invalid_argument("function values must be finite or +inf");
    }
}

double VertexFunction::at(VertexId v) const {
    if (v >= values_.size()) throw std::out_of_range("vertex " + std::to_string(v) + " has no function value");
    return values_[v];
}

void VertexFunction::set(VertexId v, double value) {
    if (v >= values_.size()) throw std::out_of_range("vertex " + std::to_string(v) + " has no function value");
    if (!is_extended_real(value)) throw std::invalid_argument("function values must be finite or +inf");
    values_[v] = value;
}

}  // namespace graphcvx
