#ifndef HOMREP_FIXTURES_HPP
#define HOMREP_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "homrep/fixtures_data.hpp"
#include "homrep/json_io.hpp"

namespace homrep {

/// Builtin groups: S2..S6, A3..A6, C<n>, D<n> (the 2n symmetries of the
/// n-gon), GL32 (the degree-7 action on the Fano plane), trivial<d>.
inline GroupPtr builtin_group(const std::string& name) {
    auto symmetric = [](int n) {
        std::vector<Perm> gens;
        if (n >= 2) {
            std::vector<int> t;
            for (int i = 0; i < n; ++i) t.push_back(i);
            std::swap(t[0], t[1]);
            gens.push_back(Perm(t));
            std::vector<int> c;
            for (int i = 0; i < n; ++i) c.push_back((i + 1) % n);
            gens.push_back(Perm(c));
        }
        return PermGroup::enumerate(static_cast<std::size_t>(n), gens);
    };
    auto alternating = [](int n) {
        std::vector<int> c3{1, 2, 0};
        for (int i = 3; i < n; ++i) c3.push_back(i);
        std::vector<int> cn;
        if (n % 2 == 1) {
            for (int i = 0; i < n; ++i) cn.push_back((i + 1) % n);
        } else {
            cn.push_back(0);
            for (int i = 1; i < n; ++i) cn.push_back(1 + (i % (n - 1)));
        }
        return PermGroup::enumerate(static_cast<std::size_t>(n), {Perm(c3), Perm(cn)});
    };
    if (name == "GL32")
        return PermGroup::enumerate(
            7, {Perm::parse("(0 1 3 2 5 6 4)", 7), Perm::parse("(3 4)(5 6)", 7)});
    if (name.size() >= 2 && name[0] == 'S') {
        int n = std::stoi(name.substr(1));
        if (n >= 2 && n <= 6) return symmetric(n);
    }
    if (name.size() >= 2 && name[0] == 'A') {
        int n = std::stoi(name.substr(1));
        if (n >= 3 && n <= 6) return alternating(n);
    }
    if (name.size() >= 2 && name[0] == 'C') {
        int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= 64) {
            std::vector<int> c;
            for (int i = 0; i < n; ++i) c.push_back((i + 1) % n);
            return PermGroup::enumerate(static_cast<std::size_t>(n), {Perm(c)});
        }
    }
    if (name.size() >= 2 && name[0] == 'D') {
        int n = std::stoi(name.substr(1));
        if (n >= 3 && n <= 32) {
            std::vector<int> rot, refl;
            for (int i = 0; i < n; ++i) rot.push_back((i + 1) % n);
            for (int i = 0; i < n; ++i) refl.push_back((n - i) % n);
            return PermGroup::enumerate(static_cast<std::size_t>(n), {Perm(rot), Perm(refl)});
        }
    }
    if (name.rfind("trivial", 0) == 0) {
        int d = name.size() > 7 ? std::stoi(name.substr(7)) : 1;
        return PermGroup::enumerate(static_cast<std::size_t>(d), {});
    }
    fail(Errc::bad_argument, "unknown builtin group '" + name + "'");
}

/// Embedded character tables, each on its own fixture group.
inline std::optional<CharacterTable> builtin_table(const std::string& name) {
    for (const auto& [n, blob] : fixtures_data::character_tables())
        if (name == n) return load_table_json(json::parse(blob));
    return std::nullopt;
}

inline std::vector<std::string> builtin_table_names() {
    std::vector<std::string> names;
    for (const auto& [n, blob] : fixtures_data::character_tables()) names.emplace_back(n);
    return names;
}

/// Isomorphism search fixture-group -> subgroup by generator images
/// (backtracking over order-matched candidates, full verification through the
/// BFS words). Returns the image of every fixture element, or nothing.
inline std::optional<std::vector<int>> find_isomorphism(const GroupPtr& from, const Subgroup& onto) {
    if (from->size() != onto.size()) return std::nullopt;
    const PermGroup& parent = *onto.parent();
    const std::size_t n = from->size();
    std::vector<int> gen_idx = from->generator_indices();
    // candidate images per generator, filtered by element order
    std::vector<std::vector<int>> candidates(gen_idx.size());
    for (std::size_t i = 0; i < gen_idx.size(); ++i) {
        int o = from->element_order(gen_idx[i]);
        for (int m : onto.members())
            if (parent.element_order(m) == o) candidates[i].push_back(m);
    }
    std::vector<int> phi(n, -1);
    auto attempt = [&](const std::vector<int>& images) -> bool {
        std::fill(phi.begin(), phi.end(), -1);
        phi[0] = 0;
        std::vector<bool> hit(parent.size(), false);
        hit[0] = true;
        for (std::size_t e = 1; e < n; ++e) {
            auto [p, gi] = from->word_step(static_cast<int>(e));
            int img = parent.mul(phi[static_cast<std::size_t>(p)],
                                 images[static_cast<std::size_t>(gi)]);
            if (hit[static_cast<std::size_t>(img)]) return false; // not injective
            if (!onto.contains(img)) return false;
            hit[static_cast<std::size_t>(img)] = true;
            phi[e] = img;
        }
        // the word map is a bijection; it is a homomorphism iff
        // phi(e s) = phi(e) phi(s) for every element and generator
        for (std::size_t e = 0; e < n; ++e)
            for (std::size_t gi = 0; gi < gen_idx.size(); ++gi) {
                int lhs = phi[static_cast<std::size_t>(from->mul(static_cast<int>(e), gen_idx[gi]))];
                if (lhs != parent.mul(phi[e], images[gi])) return false;
            }
        return true;
    };
    // odometer over candidate tuples
    std::size_t total = 1;
    for (const auto& c : candidates) {
        if (c.empty()) return std::nullopt;
        total *= c.size();
        if (total > 2'000'000) return std::nullopt; // out of budget; treat as no match
    }
    std::vector<int> images(gen_idx.size());
    for (std::size_t t = 0; t < total; ++t) {
        std::size_t r = t;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            images[i] = candidates[i][r % candidates[i].size()];
            r /= candidates[i].size();
        }
        if (attempt(images)) return phi;
    }
    return std::nullopt;
}

/// Verify phi is multiplicative everywhere (used by tests; the search already
/// guarantees it via the word construction).
inline bool is_isomorphism(const GroupPtr& from, const Subgroup& onto,
                           const std::vector<int>& phi) {
    const PermGroup& parent = *onto.parent();
    for (std::size_t a = 0; a < from->size(); ++a)
        for (int gi : from->generator_indices()) {
            int lhs = phi[static_cast<std::size_t>(from->mul(static_cast<int>(a), gi))];
            int rhs = parent.mul(phi[a], phi[static_cast<std::size_t>(gi)]);
            if (lhs != rhs) return false;
        }
    return true;
}

/// Transport a character table along an isomorphism onto a subgroup; the
/// result lives on subgroup.as_group() and is re-validated on construction.
inline CharacterTable transport_table(const CharacterTable& table, const Subgroup& onto,
                                      const std::vector<int>& phi) {
    const GroupPtr& from = table.group();
    GroupPtr hg = onto.as_group();
    std::vector<int> phi_inv_class(hg->class_count(), -1);
    // for each canonical class of the subgroup, find the fixture class of the
    // preimage of its representative
    std::vector<int> inv(onto.parent()->size(), -1);
    for (std::size_t e = 0; e < from->size(); ++e) inv[static_cast<std::size_t>(phi[e])] = static_cast<int>(e);
    auto reps = hg->class_representatives();
    for (std::size_t k = 0; k < reps.size(); ++k) {
        int parent_idx = onto.parent()->index_of(hg->element(reps[k]));
        int from_idx = inv[static_cast<std::size_t>(parent_idx)];
        ensure(from_idx >= 0, "transport: representative has a preimage");
        phi_inv_class[k] = from->class_of(from_idx);
    }
    std::vector<ClassFunction> irr;
    for (const auto& chi : table.irreducibles()) {
        std::vector<CFValue> vals(hg->class_count());
        for (std::size_t k = 0; k < vals.size(); ++k)
            vals[k] = chi.on_class(static_cast<std::size_t>(phi_inv_class[k]));
        irr.emplace_back(hg, std::move(vals));
    }
    return CharacterTable(hg, std::move(irr), table.name() + "@subgroup");
}

/// Character table for an arbitrary subgroup, obtained by matching one of the
/// embedded fixture tables up to isomorphism. The trivial subgroup is handled
/// inline.
inline std::optional<CharacterTable> table_for_subgroup(const Subgroup& h) {
    if (h.size() == 1) {
        GroupPtr hg = h.as_group();
        return CharacterTable(hg, {ClassFunction::trivial(hg)}, "C1");
    }
    for (const auto& [name, blob] : fixtures_data::character_tables()) {
        auto candidate = load_table_json(json::parse(blob));
        if (candidate.group()->size() != h.size()) continue;
        if (candidate.group()->class_count() != h.as_group()->class_count()) continue;
        auto phi = find_isomorphism(candidate.group(), h);
        if (phi) return transport_table(candidate, h, *phi);
    }
    return std::nullopt;
}

/// Extract a module affording the (rational) irreducible chi: scan coset
/// permutation modules for one containing chi with multiplicity one, project
/// onto the isotypic component and read the action off the image basis. The
/// extracted character is verified exactly; returns nothing when no
/// multiplicity-one permutation module exists or chi is irrational.
inline std::optional<GModule> extract_irreducible_module(
    const GroupPtr& g, const ClassFunction& chi, const std::vector<Subgroup>& subgroups) {
    if (!chi.all_exact()) return std::nullopt;
    const Field f = Field::rationals();
    long chi_deg = 0;
    ensure(chi.at_identity().near_integer(chi_deg), "character degree is an integer");
    // subgroups descending by order, i.e. permutation modules ascending by dim
    std::vector<const Subgroup*> order;
    for (const auto& s : subgroups) order.push_back(&s);
    std::sort(order.begin(), order.end(), [](const Subgroup* a, const Subgroup* b) {
        if (a->size() != b->size()) return a->size() > b->size();
        return a->members() < b->members();
    });
    const auto& classes = g->conjugacy_classes();
    for (const Subgroup* k : order) {
        // coset action table and its permutation character
        std::vector<int> coset_of(g->size(), -1);
        std::vector<int> reps;
        for (std::size_t x = 0; x < g->size(); ++x) {
            if (coset_of[x] >= 0) continue;
            int id = static_cast<int>(reps.size());
            reps.push_back(static_cast<int>(x));
            for (int m : k->members()) coset_of[static_cast<std::size_t>(g->mul(static_cast<int>(x), m))] = id;
        }
        const std::size_t nc = reps.size();
        // multiplicity <chi_perm, chi> via fixed-coset counts
        CFValue ip;
        for (std::size_t cl = 0; cl < classes.size(); ++cl) {
            int rep = classes[cl][0];
            long fixed = 0;
            for (std::size_t c = 0; c < nc; ++c) {
                int image = coset_of[static_cast<std::size_t>(g->mul(rep, reps[c]))];
                if (image == static_cast<int>(c)) ++fixed;
            }
            ip = ip + CFValue(fixed) * chi.on_class(cl).conj() *
                          CFValue(static_cast<long>(classes[cl].size()));
        }
        ip = ip.divided_by(static_cast<unsigned long>(g->size()));
        long mult = 0;
        if (!ip.near_integer(mult) || mult != 1) continue;
        // isotypic projector P[s][t] = (chi(1)/|G|) sum_{u : u.s = t} chi(u)
        ActionTable table(nc, std::vector<int>(g->size()));
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t e = 0; e < g->size(); ++e)
                table[c][e] = coset_of[static_cast<std::size_t>(g->mul(static_cast<int>(e), reps[c]))];
        Matrix proj(nc, nc, f);
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t e = 0; e < g->size(); ++e) {
                const CFValue& val = chi.at_element(static_cast<int>(e));
                mpq_class q = val.rational();
                if (sgn(q) == 0) continue;
                proj.at(c, static_cast<std::size_t>(table[c][e])) += Scalar(f, q);
            }
        Scalar scale(f, mpq_class(chi_deg, static_cast<long>(g->size())));
        proj = proj * scale;
        Matrix basis = row_space_basis(proj);
        if (basis.rows() != static_cast<std::size_t>(chi_deg)) continue;
        GModule perm = GModule::permutation(g, table, f);
        SpanSolver solver(basis);
        std::vector<Matrix> gens;
        bool ok = true;
        for (const Perm& pg : g->generators()) {
            Matrix rho = perm.matrix(g->index_of(pg));
            Matrix a(basis.rows(), basis.rows(), f);
            for (std::size_t i = 0; i < basis.rows() && ok; ++i) {
                auto c = solver.solve(row_times(basis.row(i), rho));
                if (!c) {
                    ok = false;
                    break;
                }
                a.set_row(i, *c);
            }
            gens.push_back(std::move(a));
        }
        if (!ok) continue;
        GModule out(g, f, basis.rows(), std::move(gens));
        out.validate();
        if (!(out.character() == chi)) continue;
        return out;
    }
    return std::nullopt;
}

/// One module per irreducible of the table where extraction succeeds.
inline std::vector<std::optional<GModule>> irreducible_modules(
    const GroupPtr& g, const CharacterTable& table, const std::vector<Subgroup>& subgroups) {
    std::vector<std::optional<GModule>> out;
    for (const auto& chi : table.irreducibles())
        out.push_back(extract_irreducible_module(g, chi, subgroups));
    return out;
}

inline std::vector<std::optional<GModule>> irreducible_modules(const GroupPtr& g,
                                                               const CharacterTable& table) {
    return irreducible_modules(g, table, all_subgroups(g));
}

} // namespace homrep

#endif
