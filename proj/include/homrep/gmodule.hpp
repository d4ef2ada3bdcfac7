#ifndef HOMREP_GMODULE_HPP
#define HOMREP_GMODULE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "homrep/classfun.hpp"
#include "homrep/matrix.hpp"

namespace homrep {

/// Action table for a finite G-set: table[s][g] = g.s (left action).
using ActionTable = std::vector<std::vector<int>>;

inline ActionTable natural_action_table(const GroupPtr& g) {
    ActionTable t(g->degree(), std::vector<int>(g->size()));
    for (std::size_t s = 0; s < g->degree(); ++s)
        for (std::size_t e = 0; e < g->size(); ++e)
            t[s][e] = g->element(static_cast<int>(e))(static_cast<int>(s));
    return t;
}

inline ActionTable regular_action_table(const GroupPtr& g) {
    ActionTable t(g->size(), std::vector<int>(g->size()));
    for (std::size_t s = 0; s < g->size(); ++s)
        for (std::size_t e = 0; e < g->size(); ++e)
            t[s][e] = g->mul(static_cast<int>(e), static_cast<int>(s));
    return t;
}

/// Finite-dimensional right G-module over a field: one action matrix per
/// generator, with element matrices derived lazily through the BFS
/// factorization words (memoized behind a lock, so concurrent readers see a
/// consistent cache). Permutation modules keep their G-set and produce
/// element matrices directly.
class GModule {
public:
    GModule() = default;

    GModule(GroupPtr g, Field f, std::size_t dim, std::vector<Matrix> generator_matrices)
        : g_(std::move(g)), f_(f), dim_(dim), gens_(std::move(generator_matrices)) {
        if (gens_.size() != g_->generators().size())
            fail(Errc::bad_argument, "one action matrix per group generator required");
        for (const auto& m : gens_) {
            if (m.rows() != dim_ || m.cols() != dim_)
                fail(Errc::bad_argument, "generator matrix shape mismatch");
            require_same_field(m.field(), f_, "module generator matrix");
        }
    }

    static GModule trivial(const GroupPtr& g, const Field& f) {
        std::vector<Matrix> gens(g->generators().size(), Matrix::identity(1, f));
        return GModule(g, f, 1, std::move(gens));
    }

    /// Permutation module on a G-set: basis e_s with e_s . g = e_{g^{-1}.s}.
    static GModule permutation(const GroupPtr& g, ActionTable gset, const Field& f) {
        for (const auto& row : gset)
            ensure(row.size() == g->size(), "action table has one column per group element");
        std::vector<Matrix> gens;
        for (const Perm& p : g->generators())
            gens.push_back(table_matrix(*g, gset, f, g->index_of(p)));
        GModule m(g, f, gset.size(), std::move(gens));
        m.gset_ = std::move(gset);
        return m;
    }

    static GModule regular(const GroupPtr& g, const Field& f) {
        return permutation(g, regular_action_table(g), f);
    }

    const GroupPtr& group() const { return g_; }
    const Field& field() const { return f_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Matrix>& generator_matrices() const { return gens_; }

    bool is_permutation_module() const { return !gset_.empty(); }
    const ActionTable& gset() const { return gset_; }

    /// Action matrix of an arbitrary element.
    Matrix matrix(int e) const {
        if (!gset_.empty()) return perm_matrix(e);
        if (e == 0) return Matrix::identity(dim_, f_);
        std::lock_guard<std::mutex> lk(cache_->mu);
        return element_matrix_locked(e);
    }

    /// Trace-of-representative character; defined in characteristic zero only.
    ClassFunction character() const {
        if (!f_.is_rational())
            fail(Errc::field_mismatch, "characters are defined over Q only (char-p module)");
        std::vector<CFValue> v;
        for (int rep : g_->class_representatives())
            v.push_back(CFValue(matrix(rep).trace().value()));
        return ClassFunction(g_, std::move(v));
    }

    GModule contragredient() const {
        if (!f_.is_rational())
            fail(Errc::field_mismatch, "contragredient implemented over Q only");
        std::vector<Matrix> gens;
        for (const auto& m : gens_) gens.push_back(inverse(m).transpose());
        return GModule(g_, f_, dim_, std::move(gens));
    }

    /// Verify the module axioms: identity, invertible generators, and
    /// rho(e s) = rho(e) rho(s) for every element e and generator s (which
    /// covers all pairs by induction on word length), plus a few sampled
    /// general pairs.
    void validate() const {
        for (const auto& m : gens_) {
            if (rank(m) != dim_) fail(Errc::check_failed, "generator matrix not invertible");
        }
        ensure(matrix(0) == Matrix::identity(dim_, f_), "identity acts as identity");
        const std::size_t n = g_->size();
        std::vector<int> sample;
        if (n <= 200) {
            for (std::size_t e = 0; e < n; ++e) sample.push_back(static_cast<int>(e));
        } else {
            unsigned long s = 12345;
            for (int t = 0; t < 1000; ++t) {
                s = s * 6364136223846793005ull + 1442695040888963407ull;
                sample.push_back(static_cast<int>((s >> 33) % n));
            }
        }
        for (int e : sample)
            for (int gi : g_->generator_indices()) {
                if (matrix(g_->mul(e, gi)) != matrix(e) * matrix(gi))
                    fail(Errc::check_failed, "module multiplicativity fails");
            }
        unsigned long s = 999;
        for (int t = 0; t < 32; ++t) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            int a = static_cast<int>((s >> 33) % n);
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            int b = static_cast<int>((s >> 33) % n);
            if (matrix(g_->mul(a, b)) != matrix(a) * matrix(b))
                fail(Errc::check_failed, "module multiplicativity fails (sampled pair)");
        }
    }

private:
    static Matrix table_matrix(const PermGroup& g, const ActionTable& gset, const Field& f,
                               int e) {
        Matrix m(gset.size(), gset.size(), f);
        int einv = g.inv(e);
        for (std::size_t s = 0; s < gset.size(); ++s)
            m.at(s, static_cast<std::size_t>(gset[s][static_cast<std::size_t>(einv)])) =
                Scalar::one(f);
        return m;
    }

    Matrix perm_matrix(int e) const { return table_matrix(*g_, gset_, f_, e); }

    Matrix element_matrix_locked(int e) const {
        if (e == 0) return Matrix::identity(dim_, f_);
        auto it = cache_->mats.find(e);
        if (it != cache_->mats.end()) return it->second;
        auto [parent, gi] = g_->word_step(e);
        Matrix m = element_matrix_locked(parent) * gens_[static_cast<std::size_t>(gi)];
        cache_->mats.emplace(e, m);
        return m;
    }

    struct Cache {
        std::mutex mu;
        std::map<int, Matrix> mats;
    };

    GroupPtr g_;
    Field f_;
    std::size_t dim_ = 0;
    std::vector<Matrix> gens_;
    ActionTable gset_; // nonempty only for permutation modules
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Row basis of the simultaneous fixed space M^H = {v : v rho(h) = v}.
/// For permutation modules these are the H-orbit indicator vectors.
inline Matrix fixed_point_basis(const GModule& m, const Subgroup& h) {
    ensure(h.parent()->same_group(*m.group()), "subgroup of the module's group");
    const Field& f = m.field();
    auto gens = h.generating_set();
    if (gens.empty()) return Matrix::identity(m.dim(), f);
    if (m.is_permutation_module()) {
        const ActionTable& t = m.gset();
        std::vector<int> orbit(m.dim(), -1);
        std::vector<std::vector<int>> orbits;
        for (std::size_t s = 0; s < m.dim(); ++s) {
            if (orbit[s] >= 0) continue;
            std::vector<int> o{static_cast<int>(s)};
            orbit[s] = static_cast<int>(orbits.size());
            for (std::size_t head = 0; head < o.size(); ++head)
                for (int gi : gens) {
                    int y = t[static_cast<std::size_t>(o[head])][static_cast<std::size_t>(gi)];
                    if (orbit[static_cast<std::size_t>(y)] < 0) {
                        orbit[static_cast<std::size_t>(y)] = orbit[s];
                        o.push_back(y);
                    }
                }
            orbits.push_back(std::move(o));
        }
        Matrix basis(orbits.size(), m.dim(), f);
        for (std::size_t i = 0; i < orbits.size(); ++i)
            for (int s : orbits[i]) basis.at(i, static_cast<std::size_t>(s)) = Scalar::one(f);
        return basis;
    }
    Matrix stacked(0, m.dim(), f);
    for (int s : gens) {
        Matrix d = m.matrix(s) - Matrix::identity(m.dim(), f);
        stacked = stacked.rows() == 0 ? d.transpose() : Matrix::vstack(stacked, d.transpose());
    }
    return kernel_basis(stacked);
}

/// Module structure induced on an invariant row-space (rows of `basis`),
/// over the subgroup n (which must preserve the space).
inline GModule submodule_on_basis(const GModule& m, const Matrix& basis, const Subgroup& n) {
    GroupPtr ng = n.as_group();
    SpanSolver solver(basis);
    std::vector<Matrix> gens;
    for (const Perm& p : ng->generators()) {
        Matrix rho = m.matrix(m.group()->index_of(p));
        Matrix a(basis.rows(), basis.rows(), m.field());
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            auto img = row_times(basis.row(i), rho);
            auto c = solver.solve(img);
            if (!c)
                fail(Errc::internal, "subspace is not invariant under the requested action");
            a.set_row(i, *c);
        }
        gens.push_back(std::move(a));
    }
    return GModule(ng, m.field(), basis.rows(), std::move(gens));
}

/// Fixed points of h on m together with the module structure for any
/// normalizing subgroup n (defaults: the normalizer's job is the caller's).
inline GModule fixed_point_module(const GModule& m, const Subgroup& h, const Subgroup& n) {
    return submodule_on_basis(m, fixed_point_basis(m, h), n);
}

/// dim Hom_G(A, B): the solution space of rho_A(g) X = X rho_B(g) over all
/// generators, by plain linear algebra.
inline std::size_t dim_hom_g(const GModule& a, const GModule& b) {
    ensure(a.group()->same_group(*b.group()), "modules over the same group");
    require_same_field(a.field(), b.field(), "dim_hom_g");
    const Field& f = a.field();
    const std::size_t da = a.dim(), db = b.dim();
    if (da == 0 || db == 0) return 0;
    Matrix sys(0, da * db, f);
    for (std::size_t gi = 0; gi < a.generator_matrices().size(); ++gi) {
        const Matrix& ra = a.generator_matrices()[gi];
        const Matrix& rb = b.generator_matrices()[gi];
        // rows of (ra x I - I x rb^T), row-major vectorization of X
        Matrix block = ra.kron(Matrix::identity(db, f)) -
                       Matrix::identity(da, f).kron(rb.transpose());
        sys = sys.rows() == 0 ? block : Matrix::vstack(sys, block);
    }
    return kernel_basis(sys).rows();
}

/// The +/-1 one-dimensional module of n on which the "even" index-2 subgroup
/// (generated by commutators and squares) acts trivially; empty when no such
/// character exists or when it is not unique.
inline std::optional<GModule> sign_module(const Subgroup& n, const Field& f) {
    const GroupPtr& g = n.parent();
    std::vector<int> seed;
    for (int a : n.members()) {
        for (int b : n.members())
            seed.push_back(g->mul(g->mul(a, b), g->inv(g->mul(b, a))));
        seed.push_back(g->mul(a, a));
    }
    auto even = subgroup_closure(*g, seed);
    if (even.size() * 2 != n.size()) return std::nullopt;
    GroupPtr ng = n.as_group();
    std::vector<Matrix> gens;
    for (const Perm& p : ng->generators()) {
        Matrix m1(1, 1, f);
        bool is_even = std::binary_search(even.begin(), even.end(), g->index_of(p));
        m1.at(0, 0) = Scalar(f, is_even ? 1 : -1);
        gens.push_back(std::move(m1));
    }
    return GModule(ng, f, 1, std::move(gens));
}

} // namespace homrep

#endif
