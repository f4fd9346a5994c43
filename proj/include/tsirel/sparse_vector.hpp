#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "tsirel/finset.hpp"
#include "tsirel/rational.hpp"

namespace tsirel {

// Element of c00: finitely many nonzero rational coordinates over N.
// Immutable value type; entries sorted by index, no explicit zeros.
class SparseVector {
public:
    using Entry = std::pair<Index, Rational>;

    SparseVector() = default;

    static SparseVector unit(Index k) {
        SparseVector x;
        x.entries_.emplace_back(k, Rational(1));
        return x;
    }

    static SparseVector from_entries(std::vector<Entry> es) {
        std::sort(es.begin(), es.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        SparseVector x;
        for (auto& e : es) {
            if (e.second == 0) continue;
            if (!x.entries_.empty() && x.entries_.back().first == e.first)
                throw domain_error("duplicate index in vector entries");
            if (e.first < 1) throw domain_error("vector index must be >= 1");
            x.entries_.push_back(std::move(e));
        }
        return x;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    Rational at(Index k) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                                   [](const Entry& e, Index v) { return e.first < v; });
        if (it != entries_.end() && it->first == k) return it->second;
        return Rational(0);
    }

    FinSet support() const {
        std::vector<Index> idx;
        idx.reserve(entries_.size());
        for (auto& e : entries_) idx.push_back(e.first);
        return FinSet(std::move(idx));
    }

    Index min_support() const { return entries_.front().first; }
    Index max_support() const { return entries_.back().first; }

    SparseVector restrict(const FinSet& E) const {
        SparseVector out;
        for (auto& e : entries_)
            if (E.contains(e.first)) out.entries_.push_back(e);
        return out;
    }

    Rational c0_norm() const {
        Rational m = 0;
        for (auto& e : entries_) {
            Rational a = rat_abs(e.second);
            if (a > m) m = a;
        }
        return m;
    }

    Rational l1_norm() const {
        Rational s = 0;
        for (auto& e : entries_) s += rat_abs(e.second);
        return s;
    }

    Rational sum() const {
        Rational s = 0;
        for (auto& e : entries_) s += e.second;
        return s;
    }

    SparseVector scale(const Rational& c) const {
        SparseVector out;
        if (c == 0) return out;
        out.entries_ = entries_;
        for (auto& e : out.entries_) e.second *= c;
        return out;
    }

    SparseVector add(const SparseVector& other) const {
        SparseVector out;
        std::size_t i = 0, j = 0;
        while (i < entries_.size() || j < other.entries_.size()) {
            if (j == other.entries_.size() ||
                (i < entries_.size() && entries_[i].first < other.entries_[j].first)) {
                out.entries_.push_back(entries_[i++]);
            } else if (i == entries_.size() || other.entries_[j].first < entries_[i].first) {
                out.entries_.push_back(other.entries_[j++]);
            } else {
                Rational s = entries_[i].second + other.entries_[j].second;
                if (s != 0) out.entries_.emplace_back(entries_[i].first, s);
                ++i;
                ++j;
            }
        }
        return out;
    }

    bool operator==(const SparseVector& other) const { return entries_ == other.entries_; }

private:
    std::vector<Entry> entries_;
};

inline std::pair<Rational, Rational> seminorms(const SparseVector& x) {
    return {x.c0_norm(), x.l1_norm()};
}

// Support as ordered singletons; the block decompositions' substrate.
inline std::vector<FinSet> interval_partition_points(const SparseVector& x) {
    std::vector<FinSet> out;
    out.reserve(x.support_size());
    for (auto& e : x.entries()) out.push_back(FinSet{e.first});
    return out;
}

} // namespace tsirel
