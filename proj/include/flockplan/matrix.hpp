#pragma once

#include <cstddef>
#include <vector>

namespace flockplan {

/// Dense square matrix, row-major. Just enough for the all-pairs tables.
template <class T>
class Grid {
public:
    Grid() = default;
    explicit Grid(std::size_t n, T fill = T{}) : n_(n), v_(n * n, fill) {}

    std::size_t size() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }

    bool operator==(const Grid&) const = default;

    const std::vector<T>& data() const { return v_; }

private:
    std::size_t n_ = 0;
    std::vector<T> v_;
};

}  // namespace flockplan
