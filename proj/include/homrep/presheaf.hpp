#ifndef HOMREP_PRESHEAF_HPP
#define HOMREP_PRESHEAF_HPP

#include <map>
#include <memory>
#include <vector>

#include "homrep/gmodule.hpp"
#include "homrep/gposet.hpp"

namespace homrep {

/// G-presheaf on a G-poset: a contravariant functor on the transporter
/// category, stored as its poset part plus one map per (generator, object).
///
/// All maps are written in row convention:
///   - restriction(x, y) for x <= y is the d_y x d_x matrix of
///     F(x<=y) : F(y) -> F(x),
///   - generator_map(gi, x) is the d_{g.x} x d_x matrix of
///     F(1_{g.x} g) : F(g.x) -> F(x).
/// Every morphism (alpha g) factors as (alpha 1)(1 g), so these two families
/// determine the functor; the mixing law that makes the factorization
/// consistent is a checked invariant.
class GPresheaf {
public:
    GPresheaf(std::shared_ptr<const GPoset> poset, Field field, std::vector<std::size_t> dims,
              std::map<std::pair<int, int>, Matrix> restrictions,
              std::vector<std::vector<Matrix>> generator_maps, bool constant_fibers = false)
        : poset_(std::move(poset)),
          f_(field),
          dims_(std::move(dims)),
          res_(std::move(restrictions)),
          gen_(std::move(generator_maps)),
          constant_(constant_fibers) {
        validate();
    }

    const GPoset& poset() const { return *poset_; }
    std::shared_ptr<const GPoset> poset_ptr() const { return poset_; }
    const GroupPtr& group() const { return poset_->group(); }
    const Field& field() const { return f_; }
    std::size_t dim(int x) const { return dims_[static_cast<std::size_t>(x)]; }
    bool constant_fibers() const { return constant_; }

    /// F(x<=y) : F(y) -> F(x), identity when x == y.
    const Matrix& restriction(int x, int y) const {
        ensure(poset_->leq(x, y), "restriction requires x <= y");
        auto it = res_.find({x, y});
        ensure(it != res_.end(), "restriction matrix present");
        return it->second;
    }

    /// F(1_{g.x} g) : F(g.x) -> F(x) for a generator index gi.
    const Matrix& generator_map(int gi, int x) const {
        return gen_[static_cast<std::size_t>(gi)][static_cast<std::size_t>(x)];
    }

    /// F(1_{e.x} e) : F(e.x) -> F(x) for an arbitrary element, composed along
    /// the BFS factorization word.
    Matrix element_map(int e, int x) const {
        const GroupPtr& g = group();
        if (e == 0) return Matrix::identity(dim(x), f_);
        auto [parent, gi] = g->word_step(e);
        // e = parent * gen : map(e at x) = map(parent at gen.x) * map(gen at x)
        int gx = poset_->act(g->generator_indices()[static_cast<std::size_t>(gi)], x);
        return element_map(parent, gx) * generator_map(gi, x);
    }

    /// Value of the functor on a transporter morphism (alpha g) : x -> y,
    /// as the matrix F(y) -> F(x).
    Matrix evaluate(const TransporterMorphism& m) const {
        Matrix where = restriction(poset_->act(m.g, m.src), m.tgt);
        return where * element_map(m.g, m.src);
    }

    void validate() const {
        const GPoset& p = *poset_;
        const std::size_t n = p.size();
        ensure(dims_.size() == n, "one fiber dimension per element");
        ensure(gen_.size() == group()->generators().size(), "one map family per generator");
        // shapes, identity restrictions
        for (std::size_t x = 0; x < n; ++x) {
            const Matrix& idm = restriction(static_cast<int>(x), static_cast<int>(x));
            if (idm != Matrix::identity(dims_[x], f_))
                fail(Errc::schema_violation, "identity morphism must map to the identity matrix");
        }
        for (int x = 0; x < static_cast<int>(n); ++x)
            for (int y = 0; y < static_cast<int>(n); ++y)
                if (p.leq(x, y)) {
                    const Matrix& r = restriction(x, y);
                    if (r.rows() != dim(y) || r.cols() != dim(x))
                        fail(Errc::schema_violation, "restriction matrix shape mismatch");
                    require_same_field(r.field(), f_, "presheaf restriction");
                }
        for (std::size_t gi = 0; gi < gen_.size(); ++gi) {
            ensure(gen_[gi].size() == n, "generator maps cover all objects");
            int gidx = group()->generator_indices()[gi];
            for (int x = 0; x < static_cast<int>(n); ++x) {
                const Matrix& m = gen_[gi][static_cast<std::size_t>(x)];
                if (m.rows() != dim(p.act(gidx, x)) || m.cols() != dim(x))
                    fail(Errc::schema_violation, "generator map shape mismatch");
                require_same_field(m.field(), f_, "presheaf generator map");
            }
        }
        // functoriality on the poset part: F(x<=y) F(y<=z) = F(x<=z)
        for (int x = 0; x < static_cast<int>(n); ++x)
            for (int y = 0; y < static_cast<int>(n); ++y) {
                if (!p.leq(x, y)) continue;
                for (int z = 0; z < static_cast<int>(n); ++z) {
                    if (!p.leq(y, z)) continue;
                    if (restriction(y, z) * restriction(x, y) != restriction(x, z))
                        fail(Errc::check_failed, "presheaf functoriality fails");
                }
            }
        // mixing law: for g.x <= y,
        //   F(alpha 1) F(1 g)  =  F(1 g) F(g^{-1}(alpha) 1)
        // i.e. R[g.x <= y] * Gm[g][x] = Gm[g][g^{-1}.y] * R[x <= g^{-1}.y]
        for (std::size_t gi = 0; gi < gen_.size(); ++gi) {
            int gidx = group()->generator_indices()[gi];
            int ginv = group()->inv(gidx);
            for (int x = 0; x < static_cast<int>(n); ++x)
                for (int y = 0; y < static_cast<int>(n); ++y) {
                    if (!p.leq(p.act(gidx, x), y)) continue;
                    Matrix lhs = restriction(p.act(gidx, x), y) * gen_[gi][static_cast<std::size_t>(x)];
                    Matrix rhs = gen_[gi][static_cast<std::size_t>(p.act(ginv, y))] *
                                 restriction(x, p.act(ginv, y));
                    if (lhs != rhs) fail(Errc::check_failed, "presheaf mixing law fails");
                }
        }
        // group-part cocycle on generator pairs (and identity), via words
        for (std::size_t a = 0; a < gen_.size(); ++a)
            for (std::size_t b = 0; b < gen_.size(); ++b) {
                int ga = group()->generator_indices()[a];
                int gb = group()->generator_indices()[b];
                int ab = group()->mul(ga, gb);
                for (int x = 0; x < static_cast<int>(n); ++x) {
                    // map(ab at x) = map(a at b.x) * map(b at x)
                    Matrix lhs = element_map(ab, x);
                    Matrix rhs = gen_[a][static_cast<std::size_t>(p.act(gb, x))] *
                                 gen_[b][static_cast<std::size_t>(x)];
                    if (lhs != rhs) fail(Errc::check_failed, "presheaf cocycle law fails");
                }
            }
    }

private:
    std::shared_ptr<const GPoset> poset_;
    Field f_;
    std::vector<std::size_t> dims_;
    std::map<std::pair<int, int>, Matrix> res_;
    std::vector<std::vector<Matrix>> gen_;
    bool constant_;
};

namespace detail {

inline std::map<std::pair<int, int>, Matrix> identity_restrictions(const GPoset& p, const Field& f,
                                                                   const std::vector<std::size_t>& dims) {
    std::map<std::pair<int, int>, Matrix> res;
    for (int x = 0; x < static_cast<int>(p.size()); ++x)
        for (int y = 0; y < static_cast<int>(p.size()); ++y)
            if (p.leq(x, y)) {
                ensure(dims[static_cast<std::size_t>(x)] == dims[static_cast<std::size_t>(y)],
                       "identity restrictions need equal fiber dims");
                res.emplace(std::make_pair(x, y),
                            Matrix::identity(dims[static_cast<std::size_t>(x)], f));
            }
    return res;
}

} // namespace detail

/// kappa_M: every fiber is M, poset maps identity, group maps the action.
inline GPresheaf constant_presheaf(std::shared_ptr<const GPoset> poset, const GModule& m) {
    const GPoset& p = *poset;
    ensure(p.group()->same_group(*m.group()), "module over the acting group");
    std::vector<std::size_t> dims(p.size(), m.dim());
    auto res = detail::identity_restrictions(p, m.field(), dims);
    std::vector<std::vector<Matrix>> gen(m.generator_matrices().size(),
                                         std::vector<Matrix>(p.size(), Matrix()));
    for (std::size_t gi = 0; gi < gen.size(); ++gi)
        for (std::size_t x = 0; x < p.size(); ++x) gen[gi][x] = m.generator_matrices()[gi];
    return GPresheaf(std::move(poset), m.field(), std::move(dims), std::move(res), std::move(gen),
                     /*constant=*/true);
}

/// The coset presheaf N-fraktur on G/H determined by an H-module N: every
/// fiber is N, and the morphism 1_{g_i H} g acts through the unique h in H
/// with g g_j = g_i h.
inline GPresheaf coset_presheaf(std::shared_ptr<const GPoset> poset, const Subgroup& h,
                                const GModule& n) {
    const GPoset& p = *poset;
    const GroupPtr& g = p.group();
    ensure(p.kind() == ElementKind::coset_members, "coset presheaf lives on a coset poset");
    ensure(n.group()->same_group(*h.as_group()), "N is a module of H");
    GroupPtr hg = h.as_group();
    std::vector<std::size_t> dims(p.size(), n.dim());
    auto res = detail::identity_restrictions(p, n.field(), dims);
    std::vector<std::vector<Matrix>> gen(g->generators().size(),
                                         std::vector<Matrix>(p.size(), Matrix()));
    for (std::size_t gi = 0; gi < gen.size(); ++gi) {
        int gidx = g->generator_indices()[gi];
        for (int x = 0; x < static_cast<int>(p.size()); ++x) {
            // morphism x -> g.x, i.e. 1_{g_i H} g with target coset g.x = g_i H
            int gj = p.key(x).front(); // minimal coset representative
            int target = p.act(gidx, x);
            int giRep = p.key(target).front();
            // unique h in H with  g * g_j = g_i * h
            int hh = g->mul(g->inv(giRep), g->mul(gidx, gj));
            ensure(h.contains(hh), "coset structure element lies in H");
            gen[gi][static_cast<std::size_t>(x)] = n.matrix(hg->index_of(g->element(hh)));
        }
    }
    return GPresheaf(std::move(poset), n.field(), std::move(dims), std::move(res), std::move(gen));
}

/// Fixed-point presheaf of M on a poset of p-subgroups: fiber M^V at V,
/// inclusions M^{V'} into M^V for V <= V', and the action of g restricted
/// to fixed spaces.
inline GPresheaf fixed_point_presheaf(std::shared_ptr<const GPoset> poset, const GModule& m) {
    const GPoset& p = *poset;
    const GroupPtr& g = p.group();
    ensure(p.kind() == ElementKind::subgroup_members, "fixed-point presheaf needs subgroup elements");
    ensure(g->same_group(*m.group()), "module over the acting group");
    const Field& f = m.field();
    const std::size_t n = p.size();

    std::vector<Matrix> basis(n);
    std::vector<std::size_t> dims(n);
    std::vector<SpanSolver> solvers;
    solvers.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
        Subgroup v(g, p.key(static_cast<int>(x)));
        basis[x] = fixed_point_basis(m, v);
        dims[x] = basis[x].rows();
        solvers.emplace_back(basis[x]);
    }

    auto express = [&](const Matrix& rows, std::size_t x) {
        Matrix out(rows.rows(), dims[x], f);
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            auto c = solvers[x].solve(rows.row(i));
            if (!c) fail(Errc::internal, "fixed-space image escaped the target fixed space");
            out.set_row(i, *c);
        }
        return out;
    };

    std::map<std::pair<int, int>, Matrix> res;
    for (int x = 0; x < static_cast<int>(n); ++x)
        for (int y = 0; y < static_cast<int>(n); ++y)
            if (p.leq(x, y)) {
                // M^{V_y} is contained in M^{V_x}; express its basis there
                res.emplace(std::make_pair(x, y), express(basis[static_cast<std::size_t>(y)],
                                                          static_cast<std::size_t>(x)));
            }

    std::vector<std::vector<Matrix>> gen(g->generators().size(),
                                         std::vector<Matrix>(n, Matrix()));
    for (std::size_t gi = 0; gi < gen.size(); ++gi) {
        int gidx = g->generator_indices()[gi];
        Matrix rho = m.matrix(gidx);
        for (std::size_t x = 0; x < n; ++x) {
            int gx = p.act(gidx, static_cast<int>(x));
            // map F(g.x) -> F(x): v in M^{gV} goes to v rho(g) in M^V
            Matrix moved(basis[static_cast<std::size_t>(gx)].rows(), m.dim(), f);
            for (std::size_t i = 0; i < moved.rows(); ++i)
                moved.set_row(i, row_times(basis[static_cast<std::size_t>(gx)].row(i), rho));
            gen[gi][x] = express(moved, x);
        }
    }
    return GPresheaf(std::move(poset), f, std::move(dims), std::move(res), std::move(gen));
}

/// Atomic presheaf S_{x,V}: the fibers are copies of V on the orbit of x
/// (transported along the BFS-first orbit transversal), zero elsewhere, and
/// every poset map between distinct elements is zero.
inline GPresheaf atomic_presheaf(std::shared_ptr<const GPoset> poset, int x0, const GModule& v) {
    const GPoset& p = *poset;
    const GroupPtr& g = p.group();
    Subgroup stab = p.stabilizer(x0);
    GroupPtr stabg = stab.as_group();
    ensure(v.group()->same_group(*stabg), "V is a module of the stabilizer of x");
    const Field& f = v.field();
    const std::size_t n = p.size();

    // BFS-first transversal: the first group element (in enumeration order)
    // carrying x0 to each orbit element
    std::vector<int> transversal(n, -1);
    for (std::size_t e = 0; e < g->size(); ++e) {
        int y = p.act(static_cast<int>(e), x0);
        if (transversal[static_cast<std::size_t>(y)] < 0)
            transversal[static_cast<std::size_t>(y)] = static_cast<int>(e);
    }

    std::vector<std::size_t> dims(n, 0);
    for (std::size_t y = 0; y < n; ++y)
        if (transversal[y] >= 0) dims[y] = v.dim();

    std::map<std::pair<int, int>, Matrix> res;
    for (int a = 0; a < static_cast<int>(n); ++a)
        for (int b = 0; b < static_cast<int>(n); ++b)
            if (p.leq(a, b)) {
                if (a == b)
                    res.emplace(std::make_pair(a, b),
                                Matrix::identity(dims[static_cast<std::size_t>(a)], f));
                else
                    res.emplace(std::make_pair(a, b),
                                Matrix(dims[static_cast<std::size_t>(b)],
                                       dims[static_cast<std::size_t>(a)], f));
            }

    std::vector<std::vector<Matrix>> gen(g->generators().size(),
                                         std::vector<Matrix>(n, Matrix()));
    for (std::size_t gi = 0; gi < gen.size(); ++gi) {
        int gidx = g->generator_indices()[gi];
        for (std::size_t y = 0; y < n; ++y) {
            int gy = p.act(gidx, static_cast<int>(y));
            if (transversal[y] < 0) {
                gen[gi][y] = Matrix(dims[static_cast<std::size_t>(gy)], dims[y], f);
                continue;
            }
            // fiber at y identified via t_y, fiber at g.y via t_{g.y};
            // the map F(g.y) -> F(y) is the action of s = t_{g.y}^{-1} g t_y
            int s = g->mul(g->inv(transversal[static_cast<std::size_t>(gy)]),
                           g->mul(gidx, transversal[y]));
            ensure(stab.contains(s), "transversal twist lands in the stabilizer");
            gen[gi][y] = v.matrix(stabg->index_of(g->element(s)));
        }
    }
    return GPresheaf(std::move(poset), f, std::move(dims), std::move(res), std::move(gen));
}

/// dim of natural transformations F -> kappa_M, by linear algebra over the
/// generating morphisms (covers and group generators).
inline std::size_t dim_hom_presheaf(const GPresheaf& fsh, const GModule& m) {
    const GPoset& p = fsh.poset();
    ensure(p.group()->same_group(*m.group()), "module over the acting group");
    require_same_field(fsh.field(), m.field(), "dim_hom_presheaf");
    const Field& f = fsh.field();
    const std::size_t md = m.dim();
    const std::size_t n = p.size();
    std::vector<std::size_t> off(n + 1, 0);
    for (std::size_t x = 0; x < n; ++x) off[x + 1] = off[x] + fsh.dim(static_cast<int>(x)) * md;
    const std::size_t unknowns = off[n];
    if (unknowns == 0) return 0;
    std::vector<std::vector<Scalar>> rows;
    auto add_equations = [&](int src_obj, const Matrix& a, int dst_obj, const Matrix& rho) {
        // equation: a * eta_{src} = eta_{dst} * rho, entrywise
        const std::size_t r = a.rows();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < md; ++j) {
                std::vector<Scalar> row(unknowns, Scalar::zero(f));
                for (std::size_t k = 0; k < a.cols(); ++k)
                    row[off[static_cast<std::size_t>(src_obj)] + k * md + j] += a.at(i, k);
                for (std::size_t l = 0; l < md; ++l)
                    row[off[static_cast<std::size_t>(dst_obj)] + i * md + l] -= rho.at(l, j);
                rows.push_back(std::move(row));
            }
    };
    Matrix id_m = Matrix::identity(md, f);
    for (int x = 0; x < static_cast<int>(n); ++x)
        for (int y = 0; y < static_cast<int>(n); ++y)
            if (p.less(x, y)) add_equations(x, fsh.restriction(x, y), y, id_m);
    for (std::size_t gi = 0; gi < p.group()->generators().size(); ++gi) {
        int gidx = p.group()->generator_indices()[gi];
        for (int x = 0; x < static_cast<int>(n); ++x)
            add_equations(x, fsh.generator_map(static_cast<int>(gi), x), p.act(gidx, x),
                          m.generator_matrices()[gi]);
    }
    Matrix sys(rows.size(), unknowns, f);
    for (std::size_t i = 0; i < rows.size(); ++i) sys.set_row(i, rows[i]);
    return kernel_basis(sys).rows();
}

} // namespace homrep

#endif
