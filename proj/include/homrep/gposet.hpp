#ifndef HOMREP_GPOSET_HPP
#define HOMREP_GPOSET_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "homrep/group_algorithms.hpp"

namespace homrep {

enum class ElementKind { plain, subgroup_members, coset_members, chain_indices };

/// Finite poset with an order-preserving left G-action.
///
/// Elements carry a canonical integer-vector key (members of a subgroup or
/// coset, the index sequence of a chain, ...) and are always listed in the
/// sort order of those keys, so every builder output is reproducible.
class GPoset {
public:
    static GPoset build(GroupPtr group, ElementKind kind, std::vector<std::string> labels,
                        std::vector<std::vector<int>> keys, std::vector<std::vector<bool>> leq,
                        const std::function<int(int, int)>& act /* (g, x) -> g.x */) {
        GPoset p;
        p.group_ = std::move(group);
        p.kind_ = kind;
        p.labels_ = std::move(labels);
        p.keys_ = std::move(keys);
        p.leq_ = std::move(leq);
        const std::size_t n = p.labels_.size();
        ensure(p.keys_.size() == n && p.leq_.size() == n, "poset arrays sized alike");
        p.action_.assign(n, std::vector<int>(p.group_->size()));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t g = 0; g < p.group_->size(); ++g)
                p.action_[x][g] = act(static_cast<int>(g), static_cast<int>(x));
        p.validate();
        return p;
    }

    const GroupPtr& group() const { return group_; }
    ElementKind kind() const { return kind_; }
    std::size_t size() const { return labels_.size(); }
    const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& key(int x) const { return keys_[static_cast<std::size_t>(x)]; }

    bool leq(int x, int y) const { return leq_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
    bool less(int x, int y) const { return x != y && leq(x, y); }

    int act(int g, int x) const { return action_[static_cast<std::size_t>(x)][static_cast<std::size_t>(g)]; }

    Subgroup stabilizer(int x) const {
        std::vector<int> s;
        for (std::size_t g = 0; g < group_->size(); ++g)
            if (act(static_cast<int>(g), x) == x) s.push_back(static_cast<int>(g));
        return Subgroup(group_, s);
    }

    std::vector<std::vector<int>> orbits() const {
        std::vector<int> orb(size(), -1);
        std::vector<std::vector<int>> out;
        for (int x = 0; x < static_cast<int>(size()); ++x) {
            if (orb[static_cast<std::size_t>(x)] >= 0) continue;
            std::vector<int> o;
            int id = static_cast<int>(out.size());
            orb[static_cast<std::size_t>(x)] = id;
            o.push_back(x);
            for (std::size_t head = 0; head < o.size(); ++head)
                for (std::size_t g = 0; g < group_->size(); ++g) {
                    int y = act(static_cast<int>(g), o[head]);
                    if (orb[static_cast<std::size_t>(y)] < 0) {
                        orb[static_cast<std::size_t>(y)] = id;
                        o.push_back(y);
                    }
                }
            std::sort(o.begin(), o.end());
            out.push_back(std::move(o));
        }
        return out;
    }

    /// Connected components of the comparability graph, each sorted, ordered
    /// by minimal element. Their count is Pi_0 of the poset.
    std::vector<std::vector<int>> connected_components() const {
        std::vector<int> comp(size(), -1);
        std::vector<std::vector<int>> out;
        for (int x = 0; x < static_cast<int>(size()); ++x) {
            if (comp[static_cast<std::size_t>(x)] >= 0) continue;
            std::vector<int> c{x};
            comp[static_cast<std::size_t>(x)] = static_cast<int>(out.size());
            for (std::size_t head = 0; head < c.size(); ++head)
                for (int y = 0; y < static_cast<int>(size()); ++y)
                    if (comp[static_cast<std::size_t>(y)] < 0 &&
                        (leq(c[head], y) || leq(y, c[head]))) {
                        comp[static_cast<std::size_t>(y)] = comp[static_cast<std::size_t>(x)];
                        c.push_back(y);
                    }
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        }
        return out;
    }

    /// Is the transporter category connected, i.e. does G act transitively on
    /// the connected components of the poset?
    bool transporter_connected() const {
        auto comps = connected_components();
        if (comps.size() <= 1) return size() > 0;
        std::vector<int> comp_of(size());
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (int x : comps[c]) comp_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
        // the G-orbit of the first component must cover everything
        std::vector<bool> reached(comps.size(), false);
        for (std::size_t g = 0; g < group_->size(); ++g) {
            int y = act(static_cast<int>(g), comps[0][0]);
            reached[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(y)])] = true;
        }
        for (bool r : reached)
            if (!r) return false;
        return true;
    }

    /// Stabilizer of a component (as a set of elements).
    Subgroup component_stabilizer(const std::vector<int>& component) const {
        std::vector<int> s;
        for (std::size_t g = 0; g < group_->size(); ++g) {
            bool fixes = true;
            for (int x : component)
                if (!std::binary_search(component.begin(), component.end(),
                                        act(static_cast<int>(g), x))) {
                    fixes = false;
                    break;
                }
            if (fixes) s.push_back(static_cast<int>(g));
        }
        return Subgroup(group_, s);
    }

    /// All normalized chains x_0 < ... < x_i, grouped by dimension i,
    /// enumerated in lexicographic order of the index sequence.
    std::vector<std::vector<std::vector<int>>> chains_by_dimension() const {
        std::vector<std::vector<std::vector<int>>> out;
        std::vector<std::vector<int>> cur;
        for (int x = 0; x < static_cast<int>(size()); ++x) cur.push_back({x});
        while (!cur.empty()) {
            out.push_back(cur);
            std::vector<std::vector<int>> next;
            for (const auto& c : cur)
                for (int y = 0; y < static_cast<int>(size()); ++y)
                    if (less(c.back(), y)) {
                        auto c2 = c;
                        c2.push_back(y);
                        next.push_back(std::move(c2));
                    }
            cur = std::move(next);
        }
        return out;
    }

    int index_of_key(const std::vector<int>& key) const {
        auto it = key_index_.find(key);
        ensure(it != key_index_.end(), "poset key lookup");
        return it->second;
    }

private:
    void validate() const {
        const int n = static_cast<int>(size());
        for (int i = 0; i < n; ++i) {
            if (!leq(i, i)) fail(Errc::schema_violation, "poset order not reflexive");
            for (int j = 0; j < n; ++j) {
                if (i != j && leq(i, j) && leq(j, i))
                    fail(Errc::schema_violation, "poset order not antisymmetric");
                for (int k = 0; k < n; ++k)
                    if (leq(i, j) && leq(j, k) && !leq(i, k))
                        fail(Errc::schema_violation, "poset order not transitive");
            }
        }
        // action by order automorphisms, for every group element
        const std::size_t ng = group_->size();
        for (std::size_t g = 0; g < ng; ++g) {
            for (int x = 0; x < n; ++x) {
                int gx = act(static_cast<int>(g), x);
                if (gx < 0 || gx >= n) fail(Errc::schema_violation, "poset action out of range");
                for (int y = 0; y < n; ++y)
                    if (leq(x, y) != leq(gx, act(static_cast<int>(g), y)))
                        fail(Errc::schema_violation, "poset action is not order-preserving");
            }
        }
        // group-action law (g h).x = g.(h x) on generator pairs and spot pairs
        auto check_pair = [&](int a, int b) {
            int ab = group_->mul(a, b);
            for (int x = 0; x < n; ++x)
                if (act(ab, x) != act(a, act(b, x)))
                    fail(Errc::schema_violation, "poset action incompatible with multiplication");
        };
        for (int a : group_->generator_indices())
            for (int b : group_->generator_indices()) check_pair(a, b);
        for (int a : group_->generator_indices())
            for (std::size_t b = 0; b < ng; b += (ng / 7 + 1)) check_pair(a, static_cast<int>(b));
        for (int x = 0; x < n; ++x)
            if (act(group_->identity(), x) != x)
                fail(Errc::schema_violation, "identity must act trivially");
        // canonical element order (by key length, then lexicographic) and the
        // key lookup table
        auto key_less = [](const std::vector<int>& a, const std::vector<int>& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        };
        for (int i = 0; i + 1 < n; ++i)
            ensure(key_less(keys_[static_cast<std::size_t>(i)], keys_[static_cast<std::size_t>(i + 1)]),
                   "poset elements sorted by canonical key");
        for (int i = 0; i < n; ++i) key_index_[keys_[static_cast<std::size_t>(i)]] = i;
        // the listing must be a linear extension, so chains are ascending
        // index sequences
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j)
                if (less(i, j))
                    fail(Errc::schema_violation, "element listing is not a linear extension");
    }

    GroupPtr group_;
    ElementKind kind_ = ElementKind::plain;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> keys_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::vector<int>> action_;
    mutable std::map<std::vector<int>, int> key_index_;
};

/// Morphism of the transporter category P x| G: a group element g together
/// with the order relation g.src <= tgt.
struct TransporterMorphism {
    int src;
    int tgt;
    int g;
};

inline TransporterMorphism make_morphism(const GPoset& p, int src, int tgt, int g) {
    if (!p.leq(p.act(g, src), tgt))
        fail(Errc::bad_argument, "not a transporter morphism: g.src <= tgt fails");
    return {src, tgt, g};
}

/// Composition (alpha g)(beta h) = (alpha . g(beta)) (g h) for
/// f = (alpha g) : x -> y and e = (beta h) : w -> x.
inline TransporterMorphism compose(const GPoset& p, const TransporterMorphism& f,
                                   const TransporterMorphism& e) {
    if (e.tgt != f.src) fail(Errc::bad_argument, "morphisms not composable");
    int g = p.group()->mul(f.g, e.g);
    ensure(p.leq(p.act(g, e.src), f.tgt), "composite satisfies the order constraint");
    return {e.src, f.tgt, g};
}

// ---------------------------------------------------------------- builders

/// G/H as a zero-dimensional G-poset under left multiplication.
inline GPoset coset_poset(const GroupPtr& g, const Subgroup& h) {
    ensure(h.parent()->same_group(*g), "subgroup of the acting group");
    std::vector<std::vector<int>> cosets;
    std::vector<int> coset_of(g->size(), -1);
    for (std::size_t x = 0; x < g->size(); ++x) {
        if (coset_of[x] >= 0) continue;
        std::vector<int> c;
        for (int m : h.members()) c.push_back(g->mul(static_cast<int>(x), m));
        std::sort(c.begin(), c.end());
        for (int e : c) coset_of[static_cast<std::size_t>(e)] = static_cast<int>(cosets.size());
        cosets.push_back(std::move(c));
    }
    // scanning order already yields cosets sorted by minimal member
    std::vector<std::string> labels;
    std::vector<std::vector<int>> keys;
    for (const auto& c : cosets) {
        labels.push_back(g->element(c.front()).str() + "H");
        keys.push_back(c);
    }
    const std::size_t n = cosets.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    auto act = [&](int gi, int x) {
        int rep = cosets[static_cast<std::size_t>(x)].front();
        return coset_of[static_cast<std::size_t>(g->mul(gi, rep))];
    };
    return GPoset::build(g, ElementKind::coset_members, std::move(labels), std::move(keys),
                         std::move(leq), act);
}

namespace detail {

inline GPoset subgroup_family_poset(const GroupPtr& g, std::vector<Subgroup> subs) {
    std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) { return a < b; });
    std::map<std::vector<int>, int> pos;
    for (std::size_t i = 0; i < subs.size(); ++i) pos[subs[i].members()] = static_cast<int>(i);
    std::vector<std::string> labels;
    std::vector<std::vector<int>> keys;
    for (const auto& s : subs) {
        std::string l = "<";
        auto gens = s.generating_set();
        if (gens.empty()) l += "()";
        for (std::size_t i = 0; i < gens.size(); ++i)
            l += (i ? "," : "") + g->element(gens[i]).str();
        l += ">";
        labels.push_back(l);
        keys.push_back(s.members());
    }
    const std::size_t n = subs.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            leq[i][j] = std::includes(subs[j].members().begin(), subs[j].members().end(),
                                      subs[i].members().begin(), subs[i].members().end());
    auto act = [&](int gi, int x) {
        auto c = conjugate_set(*g, gi, subs[static_cast<std::size_t>(x)].members());
        auto it = pos.find(c);
        ensure(it != pos.end(), "subgroup family closed under conjugation");
        return it->second;
    };
    return GPoset::build(g, ElementKind::subgroup_members, std::move(labels), std::move(keys),
                         std::move(leq), act);
}

} // namespace detail

enum class PSubgroupVariant { Sp, Sp1, Bp };

/// S_p (nontrivial p-subgroups), S_p^1 (all p-subgroups) or B_p (p-subgroups
/// with V = O_p(N_G(V))), ordered by inclusion with conjugation action.
inline GPoset p_subgroup_poset(const GroupPtr& g, std::size_t p, PSubgroupVariant variant) {
    std::vector<Subgroup> subs = all_p_subgroups(g, p, variant == PSubgroupVariant::Sp1);
    if (variant == PSubgroupVariant::Bp) {
        std::vector<int> universe(g->size());
        for (std::size_t i = 0; i < g->size(); ++i) universe[i] = static_cast<int>(i);
        std::vector<Subgroup> keep;
        for (const auto& v : subs) {
            auto nm = normalizer_in(*g, universe, v.members());
            if (core_p_members(*g, nm, p) == v.members()) keep.push_back(v);
        }
        subs = std::move(keep);
    }
    return detail::subgroup_family_poset(g, std::move(subs));
}

/// Whether v satisfies the B_p membership condition V = O_p(N_G(V)).
inline bool in_bouc_poset(const GroupPtr& g, const Subgroup& v, std::size_t p) {
    if (v.size() < 2 || p_part(v.size(), p) != v.size()) return false;
    std::vector<int> universe(g->size());
    for (std::size_t i = 0; i < g->size(); ++i) universe[i] = static_cast<int>(i);
    auto nm = normalizer_in(*g, universe, v.members());
    return core_p_members(*g, nm, p) == v.members();
}

/// Conjugation orbit of v as a sub-G-poset (an antichain when all conjugates
/// share one order, which they always do).
inline GPoset parabolic_orbit_poset(const GroupPtr& g, const Subgroup& v, std::size_t p) {
    if (!in_bouc_poset(g, v, p))
        fail(Errc::bad_argument, "subgroup fails the B_p condition V = O_p(N_G(V))");
    std::set<std::vector<int>> orbit;
    for (std::size_t t = 0; t < g->size(); ++t)
        orbit.insert(conjugate_set(*g, static_cast<int>(t), v.members()));
    std::vector<Subgroup> subs;
    for (const auto& m : orbit) subs.emplace_back(g, m);
    return detail::subgroup_family_poset(g, std::move(subs));
}

/// Barycentric subdivision: elements are the nonempty chains of p ordered by
/// subchain refinement, with the induced action. The map tau carrying a chain
/// to its maximum is encoded in the chain keys (their last entry).
inline GPoset barycentric_subdivision(const GPoset& p) {
    auto by_dim = p.chains_by_dimension();
    std::vector<std::vector<int>> chains;
    for (const auto& level : by_dim)
        for (const auto& c : level) chains.push_back(c);
    std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::map<std::vector<int>, int> pos;
    for (std::size_t i = 0; i < chains.size(); ++i) pos[chains[i]] = static_cast<int>(i);
    std::vector<std::string> labels;
    for (const auto& c : chains) {
        std::string l = "{";
        for (std::size_t i = 0; i < c.size(); ++i) l += (i ? "<" : "") + p.label(c[i]);
        l += "}";
        labels.push_back(l);
    }
    const std::size_t n = chains.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            leq[i][j] = std::includes(chains[j].begin(), chains[j].end(), chains[i].begin(),
                                      chains[i].end());
    auto act = [&](int gi, int x) {
        std::vector<int> img;
        for (int e : chains[static_cast<std::size_t>(x)]) img.push_back(p.act(gi, e));
        std::sort(img.begin(), img.end());
        auto it = pos.find(img);
        ensure(it != pos.end(), "chain image is a chain");
        return it->second;
    };
    auto keys = chains;
    return GPoset::build(p.group(), ElementKind::chain_indices, std::move(labels), std::move(keys),
                         std::move(leq), act);
}

/// Total order 0 < 1 < ... < n-1 with trivial action.
inline GPoset chain_poset(const GroupPtr& g, std::size_t n) {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> keys;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("c" + std::to_string(i));
        keys.push_back({static_cast<int>(i)});
    }
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
    return GPoset::build(g, ElementKind::plain, std::move(labels), std::move(keys), std::move(leq),
                         [](int, int x) { return x; });
}

/// Face poset of the hollow triangle (three vertices, three edges, no 2-cell);
/// the group must have degree 3 and acts through its point action.
inline GPoset hollow_triangle_poset(const GroupPtr& g) {
    if (g->degree() != 3) fail(Errc::bad_argument, "triangle poset needs a degree-3 group");
    // keys: {i} for vertex i, {3 + missing-vertex} for edges {i,j}
    std::vector<std::string> labels = {"v0", "v1", "v2", "e12", "e02", "e01"};
    std::vector<std::vector<int>> keys = {{0}, {1}, {2}, {3}, {4}, {5}};
    std::vector<std::vector<bool>> leq(6, std::vector<bool>(6, false));
    for (int i = 0; i < 6; ++i) leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    auto edge_has = [](int e, int v) { return e - 3 != v; }; // edge key 3+k misses vertex k
    for (int v = 0; v < 3; ++v)
        for (int e = 3; e < 6; ++e)
            if (edge_has(e, v)) leq[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)] = true;
    auto act = [&](int gi, int x) {
        const Perm& q = g->element(gi);
        if (x < 3) return q(x);
        return 3 + q(x - 3); // an edge is named by its missing vertex
    };
    return GPoset::build(g, ElementKind::plain, std::move(labels), std::move(keys), std::move(leq),
                         act);
}

} // namespace homrep

#endif
