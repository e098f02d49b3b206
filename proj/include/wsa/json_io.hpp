#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cluster.hpp"
#include "families.hpp"

namespace wsa {

using json = nlohmann::ordered_json;

inline constexpr const char* kAlgebraSchema = "wsa.algebra/1";
inline constexpr const char* kModuleSchema = "wsa.module/1";
inline constexpr const char* kClusterSchema = "wsa.cluster-report/1";
inline constexpr const char* kExtSchema = "wsa.ext/1";
inline constexpr const char* kAuditSchema = "wsa.audit/1";
inline constexpr const char* kValidationSchema = "wsa.validation/1";

inline std::string field_name(const SurfaceSpec& s) {
    return s.prime ? "GF(" + std::to_string(s.prime) + ")" : std::string("Q");
}

inline json spec_header(const SurfaceSpec& s) {
    json j;
    j["family"] = s.family;
    j["field"] = field_name(s);
    j["lambda"] = s.lambda.to_string();
    if (s.n) j["n"] = s.n;
    if (s.m) j["m"] = s.m;
    if (s.m2) j["m2"] = s.m2;
    if (s.k) j["k"] = s.k;
    return j;
}

inline json names(const Quiver& q, const std::vector<int>& vertices) {
    json out = json::array();
    for (int v : vertices) out.push_back(q.vertex_name(v));
    return out;
}

inline json classification_json(const SurfaceSpec& s, const Validation& v) {
    json j;
    j["schema"] = kValidationSchema;
    j["spec"] = spec_header(s);
    j["valid"] = v.ok();
    json viol = json::array();
    for (const auto& x : v.violations) viol.push_back({{"code", std::string(to_string(x.code))}, {"message", x.message}});
    j["violations"] = viol;
    if (!v.ok()) return j;
    const Quiver& q = s.quiver;
    const auto& cls = v.classification;
    json arrows = json::array();
    for (int a = 0; a < q.num_arrows(); ++a) {
        const auto& i = cls[a];
        arrows.push_back({{"arrow", q.arrow(a).name},
                          {"source", q.vertex_name(q.arrow(a).source)},
                          {"target", q.vertex_name(q.arrow(a).target)},
                          {"bar", q.arrow(i.bar).name},
                          {"f", q.arrow(i.f).name},
                          {"g", q.arrow(i.g).name},
                          {"n", i.n},
                          {"m", i.m},
                          {"mn", i.mn},
                          {"virtual", i.is_virtual},
                          {"param", s.param[a].to_string()}});
    }
    j["arrows"] = arrows;
    auto cycles = [&](const std::vector<std::vector<int>>& cs) {
        json out = json::array();
        for (const auto& c : cs) {
            json cj = json::array();
            for (int a : c) cj.push_back(q.arrow(a).name);
            out.push_back(cj);
        }
        return out;
    };
    j["g_cycles"] = cycles(cls.g_cycles);
    j["f_cycles"] = cycles(cls.f_cycles);
    j["gamma"] = names(q, gamma_vertices(q, cls));
    j["every_triangle_has_virtual"] = every_triangle_has_virtual(cls);
    j["gabriel_bipartite"] = gabriel_quiver_bipartite(q, cls);
    json gab = json::array();
    const Quiver gq = gabriel_quiver(q, cls);
    for (const auto& a : gq.arrows()) gab.push_back(a.name);
    j["gabriel_arrows"] = gab;
    return j;
}

template <class F>
json matrix_json(const Matrix<F>& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        out.push_back(row);
    }
    return out;
}

template <class F>
json algebra_json(const SurfaceSpec& s, const BoundedAlgebra<F>& alg, const SymmetricCheck<F>& sym, bool dump) {
    const Quiver& q = alg.quiver;
    json j;
    j["schema"] = kAlgebraSchema;
    j["spec"] = spec_header(s);
    j["dim"] = alg.dim();
    j["truncation"] = alg.truncation;
    json dims;
    auto vd = alg.vertex_dims();
    for (int v = 0; v < q.num_vertices(); ++v) dims[q.vertex_name(v)] = vd[v];
    j["vertex_dims"] = dims;
    j["vertices"] = q.vertex_names();
    j["cartan"] = alg.cartan();
    j["symmetric"] = {{"symmetric", sym.symmetric},
                      {"nondegenerate", sym.nondegenerate},
                      {"socles_simple", sym.socles_simple},
                      {"gram_rank", sym.gram_rank},
                      {"failure", sym.failure}};
    if (!dump) return j;
    json basis = json::array();
    for (int b = 0; b < alg.dim(); ++b) {
        const auto& bp = alg.basis[b];
        basis.push_back({{"source", q.vertex_name(bp.source)},
                         {"target", q.vertex_name(bp.target)},
                         {"path", bp.word.empty() ? "e_" + q.vertex_name(bp.source) : q.word_string(bp.word, " ")}});
    }
    j["basis"] = basis;
    json action = json::array();
    for (int b = 0; b < alg.dim(); ++b)
        for (int a = 0; a < q.num_arrows(); ++a) {
            const auto& img = alg.arrow_action[b][a];
            if (img.empty()) continue;
            json terms = json::array();
            for (const auto& [c, x] : img) terms.push_back({c, x.to_string()});
            action.push_back({{"basis", b}, {"arrow", q.arrow(a).name}, {"image", terms}});
        }
    j["arrow_action"] = action;
    return j;
}

template <class F>
json module_json(const Representation<F>& m) {
    const Quiver& q = m.alg->quiver;
    json j;
    j["schema"] = kModuleSchema;
    j["label"] = m.label;
    json dims;
    for (int v = 0; v < q.num_vertices(); ++v) dims[q.vertex_name(v)] = m.dims[v];
    j["dims"] = dims;
    json arrows;
    for (int a = 0; a < q.num_arrows(); ++a) arrows[q.arrow(a).name] = matrix_json(m.act[a]);
    j["arrows"] = arrows;
    return j;
}

inline json dims_json(const Quiver& q, const std::vector<int>& d) {
    json j;
    for (int v = 0; v < q.num_vertices(); ++v) j[q.vertex_name(v)] = d[v];
    return j;
}

template <class F>
json cluster_json(const SurfaceSpec& s, const BoundedAlgebra<F>& alg, const ClusterReport<F>& r,
                  const std::optional<Verdict>& expected) {
    const Quiver& q = alg.quiver;
    json j;
    j["schema"] = kClusterSchema;
    j["spec"] = spec_header(s);
    j["algebra_dim"] = alg.dim();
    j["gamma"] = names(q, r.gamma);
    json summands = json::array();
    for (const auto& x : r.summands)
        summands.push_back({{"label", x.label},
                            {"kind", x.kind},
                            {"vertex", q.vertex_name(x.vertex)},
                            {"dim", x.module.dim()},
                            {"dims", dims_json(q, x.module.dims)}});
    j["summands"] = summands;
    j["summands_pairwise_non_isomorphic"] = r.summands_distinct;
    j["ext_M"] = {{"ext1", r.m_table.ext1},
                  {"ext2", r.m_table.ext2},
                  {"all_zero", r.m_table.all_zero},
                  {"symmetric", r.m_table.symmetric}};
    json cands = json::array();
    for (const auto& c : r.candidates) {
        cands.push_back({{"label", c.module.label},
                         {"walk", names(q, c.walk)},
                         {"dim", c.module.dim()},
                         {"multiplicity", c.multiplicity},
                         {"sources", c.sources},
                         {"in_add_M", c.summand >= 0},
                         {"summand", c.summand >= 0 ? json(r.summands[c.summand].label) : json(nullptr)}});
    }
    j["candidates"] = cands;
    j["ext_M_candidates"] = {{"ext1", r.ext_to_candidates.ext1}, {"ext2", r.ext_to_candidates.ext2}, {"all_zero", r.ext_to_candidates.all_zero}};
    j["verdict"] = to_string(r.verdict);
    j["expected_verdict"] = expected ? json(to_string(*expected)) : json(nullptr);
    json pairs = json::array();
    for (const auto& p : r.nonzero_pairs) pairs.push_back({{"left", p.left}, {"right", p.right}, {"ext1", p.dim}});
    j["nonzero_ext1_pairs"] = pairs;
    if (r.witness) {
        const auto& w = *r.witness;
        j["witness"] = {{"left", w.left},
                        {"right", w.right},
                        {"ext1", w.ext1},
                        {"middle_dims", dims_json(q, w.middle_dims)},
                        {"hom_M_E", w.hom_m_e},
                        {"hom_M_N", w.hom_m_n},
                        {"end_M", w.end_m},
                        {"non_split_certified", w.certified}};
    } else {
        j["witness"] = nullptr;
    }
    j["ext_evaluations_cross_checked"] = r.ext_evaluations;
    return j;
}

inline json audit_json(const SurfaceSpec& s, const AuditRecord& a) {
    json j;
    j["schema"] = kAuditSchema;
    j["spec"] = spec_header(s);
    json period = json::array();
    for (const auto& p : a.period) period.push_back({{"vertex", p.vertex}, {"omega4_isomorphic", p.isomorphic}});
    j["period"] = {{"ok", a.period_ok()}, {"simples", period}};
    json sym = json::array();
    for (const auto& c : a.symmetry)
        sym.push_back({{"left", c.left}, {"right", c.right}, {"ext2_left_right", c.ext2_lr}, {"ext1_right_left", c.ext1_rl}});
    j["ext_symmetry"] = {{"ok", a.symmetry_ok()}, {"pairs", sym}};
    if (a.corner) {
        json steps = json::array();
        for (const auto& st : a.corner->steps)
            steps.push_back({{"t", st.t},
                             {"solvable", st.solvable},
                             {"xy_zero", st.xy_zero},
                             {"yx_zero", st.yx_zero},
                             {"longest_x", st.x_length},
                             {"longest_y", st.y_length},
                             {"socle_proportional", st.socle_proportional}});
        j["corner_algebra"] = {{"ok", a.corner->ok()},
                               {"dim", a.corner->corner_dim},
                               {"monomial_rank", a.corner->monomial_rank},
                               {"steps", steps}};
    } else {
        j["corner_algebra"] = nullptr;
    }
    j["candidate_hom_vanishing"] = a.candidate_hom_ok;
    j["omega_hom_vanishing"] = a.omega_hom_ok;
    j["ok"] = a.ok();
    return j;
}

} // namespace wsa
