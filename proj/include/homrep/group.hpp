#ifndef HOMREP_GROUP_HPP
#define HOMREP_GROUP_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "homrep/perm.hpp"

namespace homrep {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// Finite permutation group with a full element enumeration.
///
/// Elements are listed by BFS over generator words (words grow on the right,
/// generators scanned in their listed order), so element 0 is the identity
/// and the order is reproducible for a fixed generator list.
class PermGroup : public std::enable_shared_from_this<PermGroup> {
public:
    static constexpr std::size_t kDefaultBound = 20000;

    static GroupPtr enumerate(std::size_t degree, std::vector<Perm> generators,
                              std::size_t bound = kDefaultBound) {
        for (const Perm& g : generators)
            if (g.degree() != degree)
                fail(Errc::bad_argument, "generator degree mismatch");
        auto grp = std::shared_ptr<PermGroup>(new PermGroup());
        grp->degree_ = degree;
        grp->gens_ = std::move(generators);
        grp->elems_.push_back(Perm(degree));
        grp->index_[grp->elems_[0]] = 0;
        grp->parent_word_.push_back({-1, -1});
        for (std::size_t head = 0; head < grp->elems_.size(); ++head) {
            for (std::size_t gi = 0; gi < grp->gens_.size(); ++gi) {
                Perm next = grp->elems_[head] * grp->gens_[gi];
                if (grp->index_.count(next)) continue;
                if (grp->elems_.size() >= bound)
                    fail(Errc::size_bound, "group order exceeds bound " + std::to_string(bound));
                grp->index_[next] = static_cast<int>(grp->elems_.size());
                grp->elems_.push_back(std::move(next));
                grp->parent_word_.push_back({static_cast<int>(head), static_cast<int>(gi)});
            }
        }
        grp->gen_indices_.reserve(grp->gens_.size());
        for (const Perm& g : grp->gens_) grp->gen_indices_.push_back(grp->index_.at(g));
        return grp;
    }

    std::size_t degree() const { return degree_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<int>& generator_indices() const { return gen_indices_; }
    const Perm& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
    int identity() const { return 0; }

    int index_of(const Perm& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) fail(Errc::bad_argument, "permutation not in group: " + p.str());
        return it->second;
    }
    bool contains(const Perm& p) const { return index_.count(p) != 0; }

    int mul(int a, int b) const {
        if (size() <= kTableLimit) {
            build_tables();
            return mult_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
        }
        return index_of(element(a) * element(b));
    }
    int inv(int a) const {
        if (size() <= kTableLimit) {
            build_tables();
            return inv_[static_cast<std::size_t>(a)];
        }
        return index_of(element(a).inverse());
    }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

    int element_order(int i) const {
        int k = 1, a = i;
        while (a != 0) {
            a = mul(a, i);
            ++k;
        }
        return k;
    }

    /// (parent, generator) pair from the BFS: element = parent * generator.
    std::pair<int, int> word_step(int i) const {
        return {parent_word_[static_cast<std::size_t>(i)].first,
                parent_word_[static_cast<std::size_t>(i)].second};
    }

    /// Generator-index word for an element, left-to-right product order.
    std::vector<int> word(int i) const {
        std::vector<int> w;
        while (i != 0) {
            auto [p, g] = word_step(i);
            w.push_back(g);
            i = p;
        }
        std::reverse(w.begin(), w.end());
        return w;
    }

    /// Conjugacy classes as sorted element-index lists, ordered by their
    /// minimal member; the identity class {0} always comes first.
    const std::vector<std::vector<int>>& conjugacy_classes() const {
        std::call_once(classes_once_, [this] {
            std::vector<int> cls(size(), -1);
            std::vector<std::vector<int>> classes;
            for (int i = 0; i < static_cast<int>(size()); ++i) {
                if (cls[static_cast<std::size_t>(i)] >= 0) continue;
                std::vector<int> orbit;
                int id = static_cast<int>(classes.size());
                cls[static_cast<std::size_t>(i)] = id;
                orbit.push_back(i);
                for (std::size_t head = 0; head < orbit.size(); ++head)
                    for (int gi : gen_indices_) {
                        int y = conj(gi, orbit[head]);
                        if (cls[static_cast<std::size_t>(y)] < 0) {
                            cls[static_cast<std::size_t>(y)] = id;
                            orbit.push_back(y);
                        }
                    }
                std::sort(orbit.begin(), orbit.end());
                classes.push_back(std::move(orbit));
            }
            class_of_ = std::move(cls);
            classes_ = std::move(classes);
        });
        return classes_;
    }

    int class_of(int i) const {
        conjugacy_classes();
        return class_of_[static_cast<std::size_t>(i)];
    }

    std::size_t class_count() const { return conjugacy_classes().size(); }

    std::vector<int> class_representatives() const {
        std::vector<int> reps;
        for (const auto& c : conjugacy_classes()) reps.push_back(c.front());
        return reps;
    }

    bool same_group(const PermGroup& o) const {
        return degree_ == o.degree_ && elems_ == o.elems_;
    }

private:
    PermGroup() = default;

    static constexpr std::size_t kTableLimit = 1024;

    void build_tables() const {
        std::call_once(tables_once_, [this] {
            const std::size_t n = size();
            mult_.resize(n * n);
            inv_.resize(n);
            for (std::size_t a = 0; a < n; ++a) {
                inv_[a] = index_of(elems_[a].inverse());
                for (std::size_t b = 0; b < n; ++b)
                    mult_[a * n + b] = index_of(elems_[a] * elems_[b]);
            }
        });
    }

    std::size_t degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<int> gen_indices_;
    std::vector<Perm> elems_;
    std::unordered_map<Perm, int, PermHash> index_;
    std::vector<std::pair<int, int>> parent_word_;

    mutable std::once_flag tables_once_;
    mutable std::vector<int> mult_;
    mutable std::vector<int> inv_;

    mutable std::once_flag classes_once_;
    mutable std::vector<std::vector<int>> classes_;
    mutable std::vector<int> class_of_;
};

/// Subgroup of an enumerated group: the parent plus a sorted member-index set.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(GroupPtr parent, std::vector<int> members)
        : parent_(std::move(parent)), members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        member_set_.insert(members_.begin(), members_.end());
        if (!contains(0)) fail(Errc::bad_argument, "subgroup must contain the identity");
        for (int a : members_) {
            if (!contains(parent_->inv(a)))
                fail(Errc::bad_argument, "subgroup not closed under inverse");
            for (int b : members_)
                if (!contains(parent_->mul(a, b)))
                    fail(Errc::bad_argument, "subgroup not closed under product");
        }
    }

    const GroupPtr& parent() const { return parent_; }
    const std::vector<int>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(int i) const { return member_set_.count(i) != 0; }

    bool operator==(const Subgroup& o) const { return members_ == o.members_; }
    bool operator<(const Subgroup& o) const {
        if (members_.size() != o.members_.size()) return members_.size() < o.members_.size();
        return members_ < o.members_;
    }

    /// Small generating set, chosen greedily over the member list.
    std::vector<int> generating_set() const;

    /// The subgroup as a standalone enumerated group of the same degree.
    GroupPtr as_group() const;

private:
    struct Cache {
        std::mutex mu;
        GroupPtr group;
    };

    GroupPtr parent_;
    std::vector<int> members_;
    std::set<int> member_set_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Closure of a seed set of element indices under multiplication (BFS over
/// words in the seed; inverses come for free in a finite group).
inline std::vector<int> subgroup_closure(const PermGroup& g, std::vector<int> seed) {
    std::set<int> have{0};
    std::vector<int> bfs{0};
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    seed.erase(std::remove(seed.begin(), seed.end(), 0), seed.end());
    for (std::size_t head = 0; head < bfs.size(); ++head)
        for (int s : seed) {
            int y = g.mul(bfs[head], s);
            if (!have.count(y)) {
                have.insert(y);
                bfs.push_back(y);
            }
        }
    return std::vector<int>(have.begin(), have.end());
}

inline std::vector<int> Subgroup::generating_set() const {
    std::vector<int> gens;
    std::set<int> have{0};
    for (int m : members_) {
        if (have.count(m)) continue;
        gens.push_back(m);
        auto cl = subgroup_closure(*parent_, gens);
        have = std::set<int>(cl.begin(), cl.end());
        if (have.size() == members_.size()) break;
    }
    return gens;
}

inline GroupPtr Subgroup::as_group() const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    if (!cache_->group) {
        std::vector<Perm> gens;
        for (int gi : generating_set()) gens.push_back(parent_->element(gi));
        cache_->group = PermGroup::enumerate(parent_->degree(), gens);
        ensure(cache_->group->size() == members_.size(), "subgroup enumeration size");
    }
    return cache_->group;
}

} // namespace homrep

#endif
