#ifndef HOMREP_INDUCTIONS_HPP
#define HOMREP_INDUCTIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homrep/complex.hpp"

namespace homrep {

/// Element of G_0(RG): a class function, optionally with integer coordinates
/// in a supplied irreducible basis.
struct VirtualClass {
    GroupPtr group;
    ClassFunction chi;
    std::optional<std::vector<long>> coordinates;

    void attach_coordinates(const CharacterTable& table) {
        coordinates = table.decompose(chi);
    }
};

/// lk_pi [F] = sum (-1)^i [H_i(P;F)], computed at chain level via the Hopf
/// trace identity.
inline VirtualClass lk_pi(const std::shared_ptr<const GPresheaf>& fsh) {
    if (!fsh->field().is_rational())
        fail(Errc::field_mismatch, "lk_pi requires characteristic zero");
    EquivariantComplex cx = build_complex(fsh);
    return {fsh->group(), lefschetz_character(cx), std::nullopt};
}

/// r_pi = restriction along pi: the constant presheaf.
inline GPresheaf r_pi(const GModule& m, std::shared_ptr<const GPoset> poset) {
    return constant_presheaf(std::move(poset), m);
}

// ------------------------------------------------------------- Theorem 3.1

struct Theorem31Report {
    bool transporter_connected = false;
    std::size_t pi0 = 0;
    bool pi0_invertible_in_field = false;
    bool poset_connected = false;
    std::size_t dim_h0 = 0;
    std::size_t dim_m = 0;
    bool dimension_match = false;
    std::optional<ClassFunction> chi_h0;       // char 0 only
    std::optional<ClassFunction> chi_expected; // induced from the component stabilizer
    bool character_match = false;              // char 0: chi_h0 == chi_expected
    bool summand = false;                      // [M] a summand of [H_0]
    bool passed = false;
};

/// H_0(P;kappa_M) against the proof's identification R(G/H) (x) M, H the
/// stabilizer of one component; when P is itself connected this is M back.
inline Theorem31Report theorem31_check(const std::shared_ptr<const GPoset>& poset,
                                       const GModule& m,
                                       const CharacterTable* table = nullptr,
                                       const HomologyOptions& opt = {}) {
    const GPoset& p = *poset;
    Theorem31Report rep;
    rep.transporter_connected = p.transporter_connected();
    if (!rep.transporter_connected)
        fail(Errc::bad_argument, "theorem31_check requires a connected transporter category");
    auto comps = p.connected_components();
    rep.pi0 = comps.size();
    rep.poset_connected = comps.size() == 1;
    const Field& f = m.field();
    rep.pi0_invertible_in_field =
        f.is_rational() || (rep.pi0 % f.characteristic() != 0);
    rep.dim_m = m.dim();

    HomologyResult hr = homology_of_constant(poset, m, opt);
    rep.dim_h0 = hr.degrees.empty() ? 0 : hr.degrees[0].dim;
    rep.dimension_match = rep.dim_h0 == rep.pi0 * m.dim();

    if (f.is_rational()) {
        Subgroup h = p.component_stabilizer(comps[0]);
        ClassFunction chi_m = m.character();
        rep.chi_expected = induce_class_function(h, restrict_class_function(chi_m, h));
        rep.chi_h0 = hr.degrees[0].character;
        rep.character_match = rep.chi_h0 && *rep.chi_h0 == *rep.chi_expected;
        if (rep.poset_connected)
            rep.character_match = rep.character_match && *rep.chi_h0 == chi_m;
        if (table) {
            auto mm = table->decompose(chi_m);
            auto mh = table->decompose(*rep.chi_h0);
            rep.summand = true;
            for (std::size_t i = 0; i < mm.size(); ++i)
                if (mm[i] > mh[i]) rep.summand = false;
        } else {
            rep.summand = rep.pi0_invertible_in_field;
        }
        rep.passed = rep.dimension_match && rep.character_match && rep.summand;
    } else {
        rep.summand = rep.pi0_invertible_in_field;
        rep.passed = rep.dimension_match && rep.summand;
    }
    return rep;
}

// ---------------------------------------------------------------- Steinberg

/// St_P(G) = H_P(G;R) - [R], the generalized Steinberg class.
inline VirtualClass steinberg(const std::shared_ptr<const GPoset>& poset) {
    const GroupPtr& g = poset->group();
    GModule one = GModule::trivial(g, Field::rationals());
    auto kR = std::make_shared<GPresheaf>(constant_presheaf(poset, one));
    VirtualClass h = lk_pi(kR);
    return {g, h.chi - ClassFunction::trivial(g), std::nullopt};
}

// ------------------------------------------------------------ Corollary 5.4

struct Cor54Report {
    ClassFunction lhs; // lk_pi r_pi [M] - [M]
    ClassFunction rhs; // St_P(G) * [M]
    bool equal = false;
};

inline Cor54Report corollary54_check(const std::shared_ptr<const GPoset>& poset,
                                     const GModule& m) {
    if (!m.field().is_rational())
        fail(Errc::field_mismatch, "corollary54_check requires characteristic zero");
    auto kM = std::make_shared<GPresheaf>(constant_presheaf(poset, m));
    ClassFunction chi_m = m.character();
    ClassFunction lhs = lk_pi(kM).chi - chi_m;
    ClassFunction rhs = steinberg(poset).chi * chi_m;
    bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

// ------------------------------------------- the simple-presheaf formula (§ homology of atoms)

struct SimpleFormulaReport {
    ClassFunction lhs; // lk_pi of the atomic presheaf
    ClassFunction rhs; // induced reduced-homology formula
    bool interval_empty = false;
    bool equal = false;
};

/// Open upper interval P_{>x} as a poset over the stabilizer of x.
inline GPoset open_upper_interval(const GPoset& p, int x) {
    Subgroup stab = p.stabilizer(x);
    GroupPtr sg = stab.as_group();
    std::vector<int> elems;
    for (int y = 0; y < static_cast<int>(p.size()); ++y)
        if (p.less(x, y)) elems.push_back(y);
    std::vector<std::string> labels;
    std::vector<std::vector<int>> keys;
    for (int y : elems) {
        labels.push_back(p.label(y));
        keys.push_back(p.key(y));
    }
    const std::size_t n = elems.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) leq[i][j] = p.leq(elems[i], elems[j]);
    std::vector<int> parent_idx(sg->size());
    for (std::size_t h = 0; h < sg->size(); ++h)
        parent_idx[h] = p.group()->index_of(sg->element(static_cast<int>(h)));
    auto act = [&](int h, int yi) {
        int image = p.act(parent_idx[static_cast<std::size_t>(h)], elems[static_cast<std::size_t>(yi)]);
        auto it = std::find(elems.begin(), elems.end(), image);
        ensure(it != elems.end(), "stabilizer preserves the open interval");
        return static_cast<int>(it - elems.begin());
    };
    return GPoset::build(sg, p.kind(), std::move(labels), std::move(keys), std::move(leq), act);
}

/// lk_pi([S_{x,V}]) against the Bouc-style formula
///   sum_i (-1)^i [H~_{i-1}(P_{>x};k)][V] induced from G_x,
/// with H~_{-1}(empty) = k. Both sides are computed independently.
inline SimpleFormulaReport simple_formula_check(const std::shared_ptr<const GPoset>& poset,
                                                int x, const GModule& v) {
    const GPoset& p = *poset;
    Subgroup stab = p.stabilizer(x);
    GroupPtr sg = stab.as_group();
    ensure(v.group()->same_group(*sg), "V is a module of the stabilizer");
    if (!v.field().is_rational())
        fail(Errc::field_mismatch, "simple_formula_check requires characteristic zero");

    auto atom = std::make_shared<GPresheaf>(atomic_presheaf(poset, x, v));
    ClassFunction lhs = lk_pi(atom).chi;

    // right-hand side: (trivial - Lefschetz(P_{>x};kappa_R)) * chi_V, induced.
    // The empty interval contributes H~_{-1} = k, i.e. exactly the trivial
    // summand, so one formula covers both cases (Lefschetz(empty) = 0).
    GPoset interval = open_upper_interval(p, x);
    SimpleFormulaReport rep{lhs, lhs, interval.size() == 0, false};
    ClassFunction inner = ClassFunction::trivial(sg);
    if (interval.size() > 0) {
        auto ip = std::make_shared<GPoset>(std::move(interval));
        GModule one = GModule::trivial(sg, v.field());
        auto kR = std::make_shared<GPresheaf>(constant_presheaf(ip, one));
        inner = inner - lk_pi(kR).chi;
    }
    ClassFunction chi_v = v.character();
    rep.rhs = induce_class_function(stab, inner * chi_v);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

// --------------------------------------------------- Harish-Chandra induction

struct HarishChandraReport {
    VirtualClass induced;       // homology route: H_0 of the orbit poset
    ClassFunction frobenius;    // plain induction from N_G(V)
    std::size_t orbit_size = 0;
    bool equal = false;
};

/// Harish-Chandra induction through the orbit poset P_I of V: builds the
/// presheaf attached to a module of N_G(V) that is trivial on V, takes H_0,
/// and checks it against plain induction from N_G(V).
inline HarishChandraReport harish_chandra_induce(const GroupPtr& g, const Subgroup& v,
                                                 const GModule& n) {
    std::size_t p = 2;
    while (v.size() % p != 0) ++p; // |V| is a prime power; find its prime
    Subgroup ngv = normalizer(g, v);
    GroupPtr ngv_grp = ngv.as_group();
    ensure(n.group()->same_group(*ngv_grp), "N is a module of N_G(V)");
    // inflation condition: V acts trivially
    for (int u : v.generating_set()) {
        if (n.matrix(ngv_grp->index_of(g->element(u))) != Matrix::identity(n.dim(), n.field()))
            fail(Errc::bad_argument, "module is not trivial on V (not inflated from the Levi)");
    }
    auto orbit = std::make_shared<GPoset>(parabolic_orbit_poset(g, v, p));
    int x0 = orbit->index_of_key(v.members());
    auto sheaf = std::make_shared<GPresheaf>(atomic_presheaf(orbit, x0, n));
    HomologyResult hr = homology_of_presheaf(sheaf);
    ensure(hr.degrees.size() == 1, "orbit poset is zero-dimensional");
    HarishChandraReport rep{{g, *hr.degrees[0].character, std::nullopt},
                            induce_class_function(ngv, n.character()),
                            orbit->size(),
                            false};
    rep.equal = rep.induced.chi == rep.frobenius;
    ensure(rep.equal, "homology-based HC induction equals plain induction");
    return rep;
}

// -------------------------------------------------------------- Alvis-Curtis

struct AlvisCurtisReport {
    VirtualClass d_class;     // D_G [M] = i_G t_G [M] - [M]
    ClassFunction ig_tg;      // i_G t_G [M]
    std::size_t poset_size = 0;
};

/// D_G[M] via the fixed-point presheaf on B_p (the realization of t_G)
/// followed by lk_pi (the realization of i_G).
inline AlvisCurtisReport alvis_curtis(const GModule& m, std::size_t p,
                                      std::shared_ptr<const GPoset> poset = nullptr) {
    if (!m.field().is_rational())
        fail(Errc::field_mismatch, "alvis_curtis requires characteristic zero");
    const GroupPtr& g = m.group();
    if (!poset)
        poset = std::make_shared<GPoset>(p_subgroup_poset(g, p, PSubgroupVariant::Bp));
    auto fixed = std::make_shared<GPresheaf>(fixed_point_presheaf(poset, m));
    ClassFunction igtg = lk_pi(fixed).chi;
    ClassFunction d = igtg - m.character();
    return {{g, std::move(d), std::nullopt}, std::move(igtg), poset->size()};
}

// ------------------------------------------------------- induction span check

struct SpanOrbitReport {
    std::string stabilizer_label;
    std::size_t stabilizer_order = 0;
    bool table_found = false;
    std::size_t induced_rows = 0;
};

struct SpanCheckReport {
    bool hypothesis_connected = false;
    bool hypothesis_vanishing = false; // reduced homology of (P, kappa_R) vanishes
    std::vector<SpanOrbitReport> orbits;
    bool complete = false; // every orbit contributed its full irreducible list
    std::size_t rational_rank = 0;
    std::size_t full_rank = 0;
    bool spans_lattice = false;
};

namespace detail {

/// Do the integer rows span Z^k? Euclidean row reduction to a triangular
/// form; the lattice is everything iff each column ends with pivot 1.
inline bool spans_integer_lattice(std::vector<std::vector<mpz_class>> rows, std::size_t k) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < k; ++c) {
        // gcd-reduce column c below row r
        while (true) {
            std::size_t nz = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (sgn(rows[i][c]) != 0 && (nz == rows.size() || abs(rows[i][c]) < abs(rows[nz][c])))
                    nz = i;
            if (nz == rows.size()) break;
            std::swap(rows[r], rows[nz]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (sgn(rows[i][c]) == 0) continue;
                mpz_class q = rows[i][c] / rows[r][c];
                for (std::size_t j = 0; j < k; ++j) rows[i][j] -= q * rows[r][j];
                if (sgn(rows[i][c]) != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < rows.size() && sgn(rows[r][c]) != 0) {
            if (abs(rows[r][c]) != 1) return false; // pivot not a unit
            ++r;
        } else {
            return false; // rank deficiency
        }
    }
    return true;
}

} // namespace detail

/// Cor. "induction theorems" data: decompositions of all characters induced
/// from all irreducibles of all stabilizers (one element per orbit), and
/// whether those rows span the full lattice Z^{#irr}.
inline SpanCheckReport induction_span_check(
    const std::shared_ptr<const GPoset>& poset, const CharacterTable& table,
    const std::function<std::optional<CharacterTable>(const Subgroup&)>& stabilizer_tables) {
    const GPoset& p = *poset;
    SpanCheckReport rep;
    rep.hypothesis_connected = p.connected_components().size() == 1 && p.size() > 0;
    {
        GModule one = GModule::trivial(p.group(), Field::rationals());
        auto kR = std::make_shared<GPresheaf>(constant_presheaf(poset, one));
        HomologyResult hr = homology_of_presheaf(kR, HomologyOptions{.with_action = false});
        rep.hypothesis_vanishing = true;
        for (std::size_t i = 0; i < hr.degrees.size(); ++i) {
            std::size_t expect = (i == 0) ? 1 : 0;
            if (hr.degrees[i].dim != expect) rep.hypothesis_vanishing = false;
        }
    }
    std::vector<std::vector<mpz_class>> rows;
    rep.complete = true;
    for (const auto& orbit : p.orbits()) {
        Subgroup gx = p.stabilizer(orbit.front());
        SpanOrbitReport orep;
        orep.stabilizer_label = p.label(orbit.front());
        orep.stabilizer_order = gx.size();
        auto sub_table = stabilizer_tables(gx);
        orep.table_found = sub_table.has_value();
        if (!sub_table) {
            rep.complete = false;
        } else {
            for (const auto& chi : sub_table->irreducibles()) {
                auto coords = table.decompose(induce_class_function(gx, chi));
                std::vector<mpz_class> row;
                for (long c : coords) row.emplace_back(c);
                rows.push_back(std::move(row));
                ++orep.induced_rows;
            }
        }
        rep.orbits.push_back(std::move(orep));
    }
    rep.full_rank = table.size();
    if (!rows.empty()) {
        Matrix m(rows.size(), table.size(), Field::rationals());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < table.size(); ++j)
                m.at(i, j) = Scalar(Field::rationals(), mpq_class(rows[i][j]));
        rep.rational_rank = rank(m);
        rep.spans_lattice = rep.complete && detail::spans_integer_lattice(rows, table.size());
    }
    return rep;
}

} // namespace homrep

#endif
