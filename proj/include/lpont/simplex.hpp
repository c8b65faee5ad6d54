#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lpont {

using Vertex = std::int32_t;

// Sorted set of at most kMaxSize vertex labels, stored inline.
class Simplex {
public:
    static constexpr std::size_t kMaxSize = 8;

    Simplex() = default;
    Simplex(std::initializer_list<Vertex> vs);
    explicit Simplex(std::span<const Vertex> vs);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }
    int dim() const { return static_cast<int>(n_) - 1; }
    Vertex operator[](std::size_t i) const { return v_[i]; }
    const Vertex* begin() const { return v_.data(); }
    const Vertex* end() const { return v_.data() + n_; }

    bool contains(Vertex x) const;
    bool contains(const Simplex& face) const;
    // Position of x in sorted order, or -1.
    int index_of(Vertex x) const;

    Simplex without(Vertex x) const;
    Simplex with(Vertex x) const;
    Simplex without_index(std::size_t i) const;

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }
    std::string str() const;

    friend bool operator==(const Simplex& a, const Simplex& b) {
        return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
    }
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
        return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    }

private:
    std::array<Vertex, kMaxSize> v_{};
    std::uint8_t n_ = 0;
};

Simplex simplex_union(const Simplex& a, const Simplex& b);
Simplex simplex_intersection(const Simplex& a, const Simplex& b);
Simplex simplex_difference(const Simplex& a, const Simplex& b);

// Sign of the permutation sorting `seq` (entries distinct).
int permutation_sign(std::span<const Vertex> seq);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const;
};

}  // namespace lpont
