#ifndef HOMREP_GROUP_ALGORITHMS_HPP
#define HOMREP_GROUP_ALGORITHMS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "homrep/group.hpp"

namespace homrep {

inline std::size_t p_part(std::size_t n, std::size_t p) {
    std::size_t q = 1;
    while (n % p == 0) {
        n /= p;
        q *= p;
    }
    return q;
}

inline bool is_p_element(const PermGroup& g, int i, std::size_t p) {
    if (i == 0) return false;
    std::size_t o = static_cast<std::size_t>(g.element_order(i));
    while (o % p == 0) o /= p;
    return o == 1;
}

/// Does h normalize the set `members` (sorted)?
inline bool normalizes(const PermGroup& g, int h, const std::vector<int>& members) {
    for (int m : members) {
        int c = g.conj(h, m);
        if (!std::binary_search(members.begin(), members.end(), c)) return false;
    }
    return true;
}

/// Normalizer of a sorted member set inside the universe (a sorted list of
/// candidate element indices, typically a subgroup's members).
inline std::vector<int> normalizer_in(const PermGroup& g, const std::vector<int>& universe,
                                      const std::vector<int>& members) {
    std::vector<int> out;
    for (int h : universe)
        if (normalizes(g, h, members)) out.push_back(h);
    return out;
}

inline std::vector<int> conjugate_set(const PermGroup& g, int h, const std::vector<int>& members) {
    std::vector<int> out;
    out.reserve(members.size());
    for (int m : members) out.push_back(g.conj(h, m));
    std::sort(out.begin(), out.end());
    return out;
}

/// Sylow p-subgroup of the subgroup with the given sorted member list,
/// found by greedy extension: repeatedly adjoin a p-element of the
/// normalizer. Returns sorted member indices (in the parent group).
inline std::vector<int> sylow_members(const PermGroup& g, const std::vector<int>& universe,
                                      std::size_t p) {
    std::size_t target = p_part(universe.size(), p);
    std::vector<int> cur{0};
    std::vector<int> gens;
    while (cur.size() < target) {
        // any p-element of the normalizer of cur (inside universe) not in cur
        int pick = -1;
        for (int h : universe) {
            if (std::binary_search(cur.begin(), cur.end(), h)) continue;
            if (!is_p_element(g, h, p)) continue;
            if (!normalizes(g, h, cur)) continue;
            pick = h;
            break;
        }
        ensure(pick >= 0, "sylow greedy extension found a normalizing p-element");
        gens.push_back(pick);
        cur = subgroup_closure(g, gens);
        std::sort(cur.begin(), cur.end());
        ensure(p_part(cur.size(), p) == cur.size(), "sylow extension stays a p-group");
    }
    return cur;
}

inline Subgroup sylow_p(const GroupPtr& g, std::size_t p) {
    std::vector<int> universe(g->size());
    for (std::size_t i = 0; i < g->size(); ++i) universe[i] = static_cast<int>(i);
    return Subgroup(g, sylow_members(*g, universe, p));
}

inline Subgroup sylow_p(const Subgroup& h, std::size_t p) {
    return Subgroup(h.parent(), sylow_members(*h.parent(), h.members(), p));
}

/// O_p of the subgroup with the given members: the intersection of all of
/// its Sylow p-subgroups (each obtained as a conjugate of one of them).
inline std::vector<int> core_p_members(const PermGroup& g, const std::vector<int>& universe,
                                       std::size_t p) {
    std::vector<int> syl = sylow_members(g, universe, p);
    std::set<int> inter(syl.begin(), syl.end());
    for (int h : universe) {
        std::vector<int> conj = conjugate_set(g, h, syl);
        std::set<int> next;
        for (int m : conj)
            if (inter.count(m)) next.insert(m);
        inter.swap(next);
        if (inter.size() == 1) break;
    }
    return std::vector<int>(inter.begin(), inter.end());
}

/// All p-subgroups, each exactly once, computed by upward closure from the
/// cyclic p-subgroups (adjoin p-elements of the normalizer until stable).
inline std::vector<Subgroup> all_p_subgroups(const GroupPtr& g, std::size_t p,
                                             bool include_trivial) {
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> queue;
    for (std::size_t i = 1; i < g->size(); ++i)
        if (is_p_element(*g, static_cast<int>(i), p)) {
            auto cyc = subgroup_closure(*g, {static_cast<int>(i)});
            if (found.insert(cyc).second) queue.push_back(cyc);
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<int> cur = queue[head];
        std::vector<int> gens = Subgroup(g, cur).generating_set();
        for (std::size_t i = 0; i < g->size(); ++i) {
            int h = static_cast<int>(i);
            if (!is_p_element(*g, h, p)) continue;
            if (std::binary_search(cur.begin(), cur.end(), h)) continue;
            if (!normalizes(*g, h, cur)) continue;
            auto gens2 = gens;
            gens2.push_back(h);
            auto ext = subgroup_closure(*g, gens2);
            if (p_part(ext.size(), p) != ext.size()) continue;
            if (found.insert(ext).second) queue.push_back(ext);
        }
    }
    std::vector<Subgroup> out;
    if (include_trivial) out.emplace_back(g, std::vector<int>{0});
    for (const auto& m : found) out.emplace_back(g, m);
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a < b; });
    return out;
}

/// Every subgroup, by BFS over the lattice: extend each known subgroup by
/// one additional element and close.
inline std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
    std::set<std::vector<int>> found;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> queue; // members, gens
    found.insert({0});
    queue.push_back({{0}, {}});
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [cur, gens] = queue[head];
        for (std::size_t i = 1; i < g->size(); ++i) {
            int h = static_cast<int>(i);
            if (std::binary_search(cur.begin(), cur.end(), h)) continue;
            auto gens2 = gens;
            gens2.push_back(h);
            auto ext = subgroup_closure(*g, gens2);
            if (found.insert(ext).second) queue.push_back({ext, gens2});
        }
    }
    std::vector<Subgroup> out;
    for (const auto& m : found) out.emplace_back(g, m);
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a < b; });
    return out;
}

/// Conjugacy classes of a list of subgroups; each class is sorted and classes
/// are ordered by their minimal member (by the subgroup ordering).
inline std::vector<std::vector<Subgroup>> subgroup_conjugacy_classes(
    const GroupPtr& g, const std::vector<Subgroup>& subs) {
    std::map<std::vector<int>, std::size_t> pos;
    for (std::size_t i = 0; i < subs.size(); ++i) pos[subs[i].members()] = i;
    std::vector<bool> used(subs.size(), false);
    std::vector<std::vector<Subgroup>> classes;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (used[i]) continue;
        std::set<std::vector<int>> orbit;
        orbit.insert(subs[i].members());
        for (std::size_t t = 0; t < g->size(); ++t) {
            auto c = conjugate_set(*g, static_cast<int>(t), subs[i].members());
            orbit.insert(c);
        }
        std::vector<Subgroup> cls;
        for (const auto& m : orbit) {
            auto it = pos.find(m);
            ensure(it != pos.end(), "conjugate subgroup present in the input list");
            used[it->second] = true;
            cls.push_back(subs[it->second]);
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

/// Derived subgroup (commutator closure).
inline Subgroup derived_subgroup(const Subgroup& h) {
    const PermGroup& g = *h.parent();
    std::vector<int> comms;
    for (int a : h.members())
        for (int b : h.members()) {
            int c = g.mul(g.mul(a, b), g.inv(g.mul(b, a)));
            comms.push_back(c);
        }
    return Subgroup(h.parent(), subgroup_closure(g, comms));
}

inline Subgroup whole_group_as_subgroup(const GroupPtr& g) {
    std::vector<int> all(g->size());
    for (std::size_t i = 0; i < g->size(); ++i) all[i] = static_cast<int>(i);
    return Subgroup(g, all);
}

inline Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

inline Subgroup normalizer(const GroupPtr& g, const Subgroup& v) {
    std::vector<int> universe(g->size());
    for (std::size_t i = 0; i < g->size(); ++i) universe[i] = static_cast<int>(i);
    return Subgroup(g, normalizer_in(*g, universe, v.members()));
}

} // namespace homrep

#endif
