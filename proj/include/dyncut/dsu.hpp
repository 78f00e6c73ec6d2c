#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace dyncut {

// Union by size with path compression.
class Dsu {
public:
    explicit Dsu(std::int32_t n) : parent_(n), size_(n, 1), classes_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::int32_t find(std::int32_t x) {
        std::int32_t r = x;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[x] != r) {
            std::int32_t next = parent_[x];
            parent_[x] = r;
            x = next;
        }
        return r;
    }

    // Returns false if already in the same class.
    bool unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --classes_;
        return true;
    }

    bool same(std::int32_t a, std::int32_t b) { return find(a) == find(b); }
    std::int32_t class_size(std::int32_t x) { return size_[find(x)]; }
    std::int32_t class_count() const { return classes_; }

private:
    std::vector<std::int32_t> parent_;
    std::vector<std::int32_t> size_;
    std::int32_t classes_;
};

}  // namespace dyncut
