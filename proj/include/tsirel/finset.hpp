#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "tsirel/errors.hpp"
#include "tsirel/rational.hpp"

namespace tsirel {

// Finite subset of N = {1, 2, ...}, kept strictly increasing. May be empty.
class FinSet {
public:
    FinSet() = default;
    FinSet(std::initializer_list<Index> xs) : v_(xs) { normalize(); }
    explicit FinSet(std::vector<Index> xs) : v_(std::move(xs)) { normalize(); }

    static FinSet interval(Index lo, Index hi) { // [lo, hi], empty if lo > hi
        FinSet f;
        for (Index x = lo; x <= hi; ++x) f.v_.push_back(x);
        return f;
    }

    bool empty() const { return v_.empty(); }
    std::size_t size() const { return v_.size(); }
    Index min() const { return v_.front(); }
    Index max() const { return v_.back(); }
    const std::vector<Index>& elements() const { return v_; }
    Index operator[](std::size_t i) const { return v_[i]; }

    bool contains(Index x) const { return std::binary_search(v_.begin(), v_.end(), x); }

    bool subset_of(const FinSet& other) const {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    bool disjoint_from(const FinSet& other) const {
        std::size_t i = 0, j = 0;
        while (i < v_.size() && j < other.v_.size()) {
            if (v_[i] == other.v_[j]) return false;
            if (v_[i] < other.v_[j]) ++i; else ++j;
        }
        return true;
    }

    FinSet intersect(const FinSet& other) const {
        FinSet out;
        std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                              std::back_inserter(out.v_));
        return out;
    }

    FinSet unite(const FinSet& other) const {
        FinSet out;
        std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                       std::back_inserter(out.v_));
        return out;
    }

    void insert(Index x) {
        auto it = std::lower_bound(v_.begin(), v_.end(), x);
        if (it == v_.end() || *it != x) v_.insert(it, x);
    }

    // I < J: max I < min J; empty compares < anything.
    bool before(const FinSet& other) const {
        if (empty() || other.empty()) return true;
        return max() < other.min();
    }

    bool operator==(const FinSet& other) const { return v_ == other.v_; }

private:
    void normalize() {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
        if (!v_.empty() && v_.front() < 1) throw domain_error("FinSet elements must be >= 1");
    }
    std::vector<Index> v_;
};

// target is a spread of F: same size, componentwise target_i >= F_i.
inline bool spreading_shift(const FinSet& F, const FinSet& target) {
    if (F.size() != target.size()) throw length_mismatch_error();
    for (std::size_t i = 0; i < F.size(); ++i)
        if (target[i] < F[i]) return false;
    return true;
}

} // namespace tsirel
