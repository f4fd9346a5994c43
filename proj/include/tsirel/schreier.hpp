#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tsirel/errors.hpp"
#include "tsirel/finset.hpp"
#include "tsirel/sparse_vector.hpp"

namespace tsirel {

enum class Mode { admissible, allowable };

inline const char* mode_name(Mode m) { return m == Mode::admissible ? "admissible" : "allowable"; }

// Greedy parser for membership in S_n. Elements are fed in increasing order;
// rem_[l] counts the S_l-blocks still allowed inside the open S_{l+1} set.
// Adding v into the deepest open set with room reproduces the canonical
// decomposition into maximal initial segments (validated against the
// exhaustive oracle in the tests).
class SchreierParser {
public:
    explicit SchreierParser(int n) : n_(n), rem_(static_cast<std::size_t>(n), 0) {}

    int level() const { return n_; }
    bool opened() const { return opened_; }

    // Level the element lands at (n_ means a fresh top-level block when n_>=1),
    // or nullopt if the set would leave S_n.
    std::optional<int> try_add(Index v) {
        if (!opened_) {
            opened_ = true;
            for (auto& r : rem_) r = v - 1;
            return n_;
        }
        for (int l = 0; l < n_; ++l) {
            if (rem_[static_cast<std::size_t>(l)] > 0) {
                rem_[static_cast<std::size_t>(l)] -= 1;
                for (int b = 0; b < l; ++b) rem_[static_cast<std::size_t>(b)] = v - 1;
                return l + 1;
            }
        }
        return std::nullopt;
    }

    bool can_add() const {
        if (!opened_) return true;
        for (auto r : rem_)
            if (r > 0) return true;
        return false;
    }

    // Caps counters at `remaining`; a suffix of that many elements cannot tell
    // the difference, which keeps memo keys dense.
    void cap(Index remaining) {
        for (auto& r : rem_)
            if (r > remaining) r = remaining;
    }

    // Exact state encoding (needs capped counters < 2^16 and n <= 6).
    unsigned __int128 key() const {
        unsigned __int128 k = opened_ ? 1 : 0;
        for (auto r : rem_) k = (k << 16) | static_cast<std::uint64_t>(r);
        return k;
    }

private:
    int n_;
    bool opened_ = false;
    std::vector<Index> rem_;
};

inline bool schreier_member(const FinSet& F, int n) {
    if (n < 0) throw domain_error("Schreier level must be >= 0");
    if (F.empty()) return true;
    if (n == 0) return F.size() <= 1;
    SchreierParser p(n);
    for (Index v : F.elements())
        if (!p.try_add(v)) return false;
    return true;
}

// Canonical decomposition of F in S_n (n >= 1) into maximal S_{n-1} blocks.
inline std::optional<std::vector<FinSet>> greedy_blocks(const FinSet& F, int n) {
    if (n < 1) throw domain_error("greedy_blocks wants n >= 1");
    std::vector<FinSet> blocks;
    if (F.empty()) return blocks;
    SchreierParser p(n);
    std::vector<Index> cur;
    for (Index v : F.elements()) {
        auto lvl = p.try_add(v);
        if (!lvl) return std::nullopt;
        if (*lvl == n && !cur.empty()) {
            blocks.emplace_back(std::move(cur));
            cur.clear();
        }
        cur.push_back(v);
    }
    if (!cur.empty()) blocks.emplace_back(std::move(cur));
    return blocks;
}

// Admissible: successive and {min E_i} in S_n. Allowable: pairwise disjoint
// and {min E_i} in S_n. Empty members are rejected.
inline bool check_sequence(const std::vector<FinSet>& sets, int n, Mode mode) {
    for (auto& s : sets)
        if (s.empty()) throw empty_member_error();
    std::vector<Index> mins;
    mins.reserve(sets.size());
    if (mode == Mode::admissible) {
        for (std::size_t i = 0; i + 1 < sets.size(); ++i)
            if (!(sets[i].max() < sets[i + 1].min())) return false;
    } else {
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j)
                if (!sets[i].disjoint_from(sets[j])) return false;
    }
    for (auto& s : sets) mins.push_back(s.min());
    return schreier_member(FinSet(std::move(mins)), n);
}

struct SeminormResult {
    Rational value;
    FinSet witness;
};

namespace detail {

struct U128Hash {
    std::size_t operator()(unsigned __int128 v) const {
        auto lo = static_cast<std::uint64_t>(v);
        auto hi = static_cast<std::uint64_t>(v >> 64);
        return std::hash<std::uint64_t>()(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
};

} // namespace detail

// ||x||_{S_p} = sup over E in S_p of the l1 norm of Ex, with an attaining
// witness. Max-weight search over parser-accepted subsets, memoized on
// (position, capped parser state); weights are scaled to a common denominator
// so the inner loop adds integers.
inline SeminormResult schreier_seminorm(const SparseVector& x, int p) {
    if (p < 0) throw domain_error("Schreier level must be >= 0");
    if (x.zero()) return {Rational(0), FinSet{}};

    // E containing 1 is a singleton in every S_p; peel index 1 off.
    if (x.min_support() == 1) {
        Rational w1 = rat_abs(x.at(1));
        FinSet rest_support = x.support();
        std::vector<Index> rest_idx(rest_support.elements().begin() + 1, rest_support.elements().end());
        SeminormResult rest = schreier_seminorm(x.restrict(FinSet(rest_idx)), p);
        if (rest.value >= w1) return rest;
        return {w1, FinSet{1}};
    }

    FinSet supp = x.support();
    if (schreier_member(supp, p)) return {x.l1_norm(), supp};
    if (p > 6) throw domain_error("schreier_seminorm: level too large for this support");

    const auto& es = x.entries();
    const std::size_t n = es.size();
    if (n >= (1u << 16)) throw support_too_large_error("schreier_seminorm: support too large");

    Int den = 1;
    for (auto& e : es) {
        Int d = rat_den(e.second);
        den = den / boost::multiprecision::gcd(den, d) * d;
    }
    std::vector<Int> w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = boost::multiprecision::abs(rat_num(es[i].second)) * (den / rat_den(es[i].second));

    std::unordered_map<unsigned __int128, Int, detail::U128Hash> memo;
    auto state_key = [&](std::size_t i, const SchreierParser& st) {
        return (st.key() << 16) | static_cast<unsigned __int128>(i);
    };

    // Best additional weight from position i onward in parser state st.
    auto rec = [&](auto&& self, std::size_t i, SchreierParser st) -> Int {
        if (i == n) return Int(0);
        st.cap(static_cast<Index>(n - i));
        auto k = state_key(i, st);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        Int best = self(self, i + 1, st);
        if (st.can_add()) {
            SchreierParser st2 = st;
            st2.try_add(es[i].first);
            Int cand = w[i] + self(self, i + 1, st2);
            if (cand > best) best = cand;
        }
        memo.emplace(k, best);
        return best;
    };

    SchreierParser init(p);
    Int best = rec(rec, 0, init);

    // Replay the choices; both successor values are memo hits.
    std::vector<Index> chosen;
    {
        std::size_t i = 0;
        SchreierParser st = init;
        while (i < n) {
            st.cap(static_cast<Index>(n - i));
            Int here = rec(rec, i, st);
            if (st.can_add()) {
                SchreierParser st2 = st;
                st2.try_add(es[i].first);
                if (w[i] + rec(rec, i + 1, st2) == here) {
                    chosen.push_back(es[i].first);
                    st = st2;
                    ++i;
                    continue;
                }
            }
            ++i;
        }
    }

    return {make_rational(best, den), FinSet(std::move(chosen))};
}

} // namespace tsirel
