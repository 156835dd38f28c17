#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cellforge {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a quotient or fold cannot be expressed as an incidence complex.
struct NonRegularError : Error {
    explicit NonRegularError(const std::string& what) : Error(what) {}
};

class Dsu {
public:
    Dsu() = default;
    explicit Dsu(int n) { grow(n); }

    int add() {
        parent_.push_back(static_cast<int>(parent_.size()));
        return parent_.back();
    }

    void grow(int n) {
        while (static_cast<int>(parent_.size()) < n) add();
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[a] = b;
    }

    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
};

inline std::uint64_t pack_pair(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace cellforge
