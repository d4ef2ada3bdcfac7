#ifndef HOMREP_JSON_IO_HPP
#define HOMREP_JSON_IO_HPP

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "homrep/inductions.hpp"

namespace homrep {

using json = nlohmann::ordered_json;

inline json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::file_not_found, "cannot open '" + path + "'");
    json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) fail(Errc::schema_violation, "malformed JSON in '" + path + "'");
    return j;
}

inline void require_schema(const json& j, std::initializer_list<const char*> fields,
                           const std::string& what) {
    if (!j.is_object()) fail(Errc::schema_violation, what + ": expected a JSON object");
    for (const char* f : fields)
        if (!j.contains(f)) fail(Errc::schema_violation, what + ": missing field '" + f + "'");
}

// ------------------------------------------------------------------- groups

/// Group file: {"schema_version":1, "degree":n, "generators":["(0 1)",...]}
inline GroupPtr load_group_json(const json& j) {
    require_schema(j, {"degree", "generators"}, "group file");
    std::size_t degree = j.at("degree").get<std::size_t>();
    std::vector<Perm> gens;
    for (const auto& s : j.at("generators")) gens.push_back(Perm::parse(s.get<std::string>(), degree));
    return PermGroup::enumerate(degree, std::move(gens));
}

// ----------------------------------------------------------- class functions

inline CFValue parse_cf_value(const json& v) {
    if (v.is_string()) {
        mpq_class q;
        if (q.set_str(v.get<std::string>(), 10) != 0)
            fail(Errc::schema_violation, "bad rational literal '" + v.get<std::string>() + "'");
        q.canonicalize();
        return CFValue(q);
    }
    if (v.is_object() && v.contains("re") && v.contains("im"))
        return CFValue::parse_decimal_pair(v.at("re").get<std::string>(),
                                           v.at("im").get<std::string>());
    fail(Errc::schema_violation, "class-function value must be \"p/q\" or {re,im}");
}

/// Character table file:
/// {"schema_version":1, "name":..., "group":{...},
///  "classes":[{"rep":"(0 1)","size":n}, ...], "irreducibles":[[v,...],...]}
///
/// The listed class representatives are matched against the group's computed
/// classes (sizes included) and the value columns are permuted to the
/// canonical class order; orthogonality is then verified on construction.
inline CharacterTable load_table_json(const json& j, GroupPtr group = nullptr) {
    require_schema(j, {"group", "classes", "irreducibles"}, "character table file");
    GroupPtr g = group ? group : load_group_json(j.at("group"));
    const auto& classes = g->conjugacy_classes();
    const json& jcl = j.at("classes");
    if (jcl.size() != classes.size())
        fail(Errc::schema_violation, "character table: class count mismatch");
    std::vector<int> file_to_canonical(jcl.size(), -1);
    std::vector<bool> used(classes.size(), false);
    for (std::size_t k = 0; k < jcl.size(); ++k) {
        require_schema(jcl[k], {"rep", "size"}, "table class entry");
        Perm rep = Perm::parse(jcl[k].at("rep").get<std::string>(), g->degree());
        int cls = g->class_of(g->index_of(rep));
        if (used[static_cast<std::size_t>(cls)])
            fail(Errc::schema_violation, "character table: duplicate class representative");
        if (classes[static_cast<std::size_t>(cls)].size() != jcl[k].at("size").get<std::size_t>())
            fail(Errc::schema_violation, "character table: class size mismatch");
        used[static_cast<std::size_t>(cls)] = true;
        file_to_canonical[k] = cls;
    }
    std::vector<ClassFunction> irr;
    for (const auto& row : j.at("irreducibles")) {
        if (row.size() != classes.size())
            fail(Errc::schema_violation, "character table: row length mismatch");
        std::vector<CFValue> vals(classes.size());
        for (std::size_t k = 0; k < row.size(); ++k)
            vals[static_cast<std::size_t>(file_to_canonical[k])] = parse_cf_value(row[k]);
        irr.emplace_back(g, std::move(vals));
    }
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "";
    return CharacterTable(g, std::move(irr), name);
}

// ------------------------------------------------------------------ modules

/// Module file: {"schema_version":1, "field":"Q"|"GF(p)", "dimension":d,
///               "generators":[[["p/q",...],...], ...]}
inline GModule load_module_json(const json& j, const GroupPtr& g) {
    require_schema(j, {"field", "dimension", "generators"}, "module file");
    std::string fs = j.at("field").get<std::string>();
    Field f = Field::rationals();
    if (fs != "Q") {
        if (fs.rfind("GF(", 0) != 0 || fs.back() != ')')
            fail(Errc::schema_violation, "field must be \"Q\" or \"GF(p)\"");
        f = Field::gf(std::stoul(fs.substr(3, fs.size() - 4)));
    }
    std::size_t d = j.at("dimension").get<std::size_t>();
    const json& jg = j.at("generators");
    if (jg.size() != g->generators().size())
        fail(Errc::schema_violation, "module file: one matrix per group generator required");
    std::vector<Matrix> gens;
    for (const auto& jm : jg) {
        if (jm.size() != d) fail(Errc::schema_violation, "module file: matrix row count");
        Matrix m(d, d, f);
        for (std::size_t r = 0; r < d; ++r) {
            if (jm[r].size() != d) fail(Errc::schema_violation, "module file: matrix column count");
            for (std::size_t c = 0; c < d; ++c)
                m.at(r, c) = Scalar::parse(f, jm[r][c].get<std::string>());
        }
        gens.push_back(std::move(m));
    }
    GModule m(g, f, d, std::move(gens));
    m.validate();
    return m;
}

// ------------------------------------------------------------------- posets

/// Poset file: {"schema_version":1, "labels":[...], "covers":[[i,j],...],
///              "action":[[...one image row per element...] per generator]}
/// Elements are re-sorted internally into a linear extension.
inline GPoset load_poset_json(const json& j, const GroupPtr& g) {
    require_schema(j, {"labels", "covers", "action"}, "poset file");
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    const std::size_t n = labels.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    for (const auto& cov : j.at("covers")) {
        std::size_t a = cov.at(0).get<std::size_t>(), b = cov.at(1).get<std::size_t>();
        if (a >= n || b >= n) fail(Errc::schema_violation, "poset file: cover out of range");
        leq[a][b] = true;
    }
    // transitive closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq[i][k])
                for (std::size_t t = 0; t < n; ++t)
                    if (leq[k][t]) leq[i][t] = true;
    const json& jact = j.at("action");
    if (jact.size() != g->generators().size())
        fail(Errc::schema_violation, "poset file: one action row per group generator");
    std::vector<std::vector<int>> gen_act(jact.size());
    for (std::size_t gi = 0; gi < jact.size(); ++gi) {
        gen_act[gi] = jact[gi].get<std::vector<int>>();
        if (gen_act[gi].size() != n)
            fail(Errc::schema_violation, "poset file: action row length mismatch");
    }
    // topological sort (stable on input order) into a linear extension
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    for (std::size_t round = 0; round < n; ++round) {
        int pick = -1;
        for (std::size_t i = 0; i < n && pick < 0; ++i) {
            if (placed[i]) continue;
            bool minimal = true;
            for (std::size_t k = 0; k < n; ++k)
                if (!placed[k] && k != i && leq[k][i]) minimal = false;
            if (minimal) pick = static_cast<int>(i);
        }
        if (pick < 0) fail(Errc::schema_violation, "poset file: covers contain a cycle");
        placed[static_cast<std::size_t>(pick)] = true;
        order.push_back(pick);
    }
    std::vector<int> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<std::string> slabels(n);
    std::vector<std::vector<int>> skeys(n);
    std::vector<std::vector<bool>> sleq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        slabels[i] = labels[static_cast<std::size_t>(order[i])];
        skeys[i] = {static_cast<int>(i)};
        for (std::size_t jj = 0; jj < n; ++jj)
            sleq[i][jj] = leq[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(order[jj])];
    }
    // extend the generator action to all elements through BFS words
    auto act = [&](int e, int x) {
        int orig = order[static_cast<std::size_t>(x)];
        std::vector<int> w = g->word(e);
        // left action: apply the word right-to-left
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            orig = gen_act[static_cast<std::size_t>(*it)][static_cast<std::size_t>(orig)];
        return pos[static_cast<std::size_t>(orig)];
    };
    return GPoset::build(g, ElementKind::plain, std::move(slabels), std::move(skeys),
                         std::move(sleq), act);
}

// ---------------------------------------------------------------- presheaves

/// Presheaf file, mirroring the stored data:
/// {"schema_version":1, "field":..., "dims":[...],
///  "restrictions":[{"x":i,"y":j,"matrix":[[...]]}, ...]   (x < y only),
///  "generator_maps":[[ [[...]] per element ] per generator]}
inline GPresheaf load_presheaf_json(const json& j, std::shared_ptr<const GPoset> poset) {
    require_schema(j, {"field", "dims", "restrictions", "generator_maps"}, "presheaf file");
    const GPoset& p = *poset;
    std::string fs = j.at("field").get<std::string>();
    Field f = fs == "Q" ? Field::rationals()
                        : Field::gf(std::stoul(fs.substr(3, fs.size() - 4)));
    std::vector<std::size_t> dims = j.at("dims").get<std::vector<std::size_t>>();
    if (dims.size() != p.size()) fail(Errc::schema_violation, "presheaf file: dims length");
    auto read_matrix = [&](const json& jm, std::size_t r, std::size_t c) {
        Matrix m(r, c, f);
        if (jm.size() != r) fail(Errc::schema_violation, "presheaf file: matrix row count");
        for (std::size_t i = 0; i < r; ++i) {
            if (jm[i].size() != c) fail(Errc::schema_violation, "presheaf file: matrix columns");
            for (std::size_t k = 0; k < c; ++k)
                m.at(i, k) = Scalar::parse(f, jm[i][k].get<std::string>());
        }
        return m;
    };
    std::map<std::pair<int, int>, Matrix> res;
    for (int x = 0; x < static_cast<int>(p.size()); ++x)
        res.emplace(std::make_pair(x, x), Matrix::identity(dims[static_cast<std::size_t>(x)], f));
    for (const auto& e : j.at("restrictions")) {
        require_schema(e, {"x", "y", "matrix"}, "presheaf restriction entry");
        int x = e.at("x").get<int>(), y = e.at("y").get<int>();
        if (x < 0 || y < 0 || x >= static_cast<int>(p.size()) || y >= static_cast<int>(p.size()) ||
            !p.less(x, y))
            fail(Errc::schema_violation, "presheaf file: restriction needs x < y in the poset");
        res.emplace(std::make_pair(x, y),
                    read_matrix(e.at("matrix"), dims[static_cast<std::size_t>(y)],
                                dims[static_cast<std::size_t>(x)]));
    }
    const json& jg = j.at("generator_maps");
    if (jg.size() != p.group()->generators().size())
        fail(Errc::schema_violation, "presheaf file: one map family per generator");
    std::vector<std::vector<Matrix>> gen(jg.size(), std::vector<Matrix>(p.size(), Matrix()));
    for (std::size_t gi = 0; gi < jg.size(); ++gi) {
        if (jg[gi].size() != p.size())
            fail(Errc::schema_violation, "presheaf file: generator maps cover all elements");
        int gidx = p.group()->generator_indices()[gi];
        for (int x = 0; x < static_cast<int>(p.size()); ++x)
            gen[gi][static_cast<std::size_t>(x)] =
                read_matrix(jg[gi][static_cast<std::size_t>(x)],
                            dims[static_cast<std::size_t>(p.act(gidx, x))],
                            dims[static_cast<std::size_t>(x)]);
    }
    return GPresheaf(std::move(poset), f, std::move(dims), std::move(res), std::move(gen));
}

// ------------------------------------------------------------------ reports

inline json class_function_json(const ClassFunction& chi) {
    json out = json::array();
    for (const auto& v : chi.values()) {
        if (v.exact())
            out.push_back(v.rational().get_num().get_str() + "/" +
                          v.rational().get_den().get_str());
        else {
            char re[80], im[80];
            gmp_snprintf(re, sizeof re, "%.20Fe", v.re().get_mpf_t());
            gmp_snprintf(im, sizeof im, "%.20Fe", v.im().get_mpf_t());
            out.push_back(json{{"re", std::string(re)}, {"im", std::string(im)}});
        }
    }
    return out;
}

inline json homology_json(const HomologyResult& hr, const CharacterTable* table = nullptr) {
    json degs = json::array();
    for (std::size_t i = 0; i < hr.degrees.size(); ++i) {
        json d;
        d["degree"] = hr.true_degree(i);
        d["dim"] = hr.degrees[i].dim;
        if (hr.degrees[i].character) {
            d["character"] = class_function_json(*hr.degrees[i].character);
            if (table) {
                json coords = json::array();
                for (long c : table->decompose(*hr.degrees[i].character)) coords.push_back(c);
                d["decomposition"] = coords;
            }
        }
        degs.push_back(std::move(d));
    }
    json out;
    out["degrees"] = std::move(degs);
    out["euler_characteristic"] = hr.euler_chains;
    return out;
}

inline void write_report(const std::string& path, json j) {
    // byte-stable output: keys sorted via regular (ordered-by-key) json
    nlohmann::json sorted = nlohmann::json::parse(j.dump());
    std::string payload = sorted.dump(2) + "\n";
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(Errc::file_not_found, "cannot write '" + tmp + "'");
        out << payload;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        fail(Errc::file_not_found, "cannot move report into place at '" + path + "'");
}

} // namespace homrep

#endif
