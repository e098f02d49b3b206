#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "representation.hpp"

namespace wsa {

// Vectors of M_v completing rad(M)_v, one per top summand.
template <class F>
std::vector<std::pair<int, std::vector<F>>> top_generators(const Representation<F>& m) {
    auto rad = radical_spaces(m);
    std::vector<std::pair<int, std::vector<F>>> gens;
    for (int v = 0; v < m.num_vertices(); ++v)
        for (int c : rad[v].complement_columns()) {
            std::vector<F> x(m.dims[v], F(0));
            x[c] = F(1);
            gens.emplace_back(v, std::move(x));
        }
    return gens;
}

template <class F>
struct ProjectiveCover {
    ProjectiveModule<F> projective;
    std::vector<std::vector<F>> generators; // images of the tops, in M
    Morphism<F> map;                        // P -> M
};

template <class F>
ProjectiveCover<F> projective_cover(const Representation<F>& m, const std::vector<Matrix<F>>& m_basis_action) {
    auto gens = top_generators(m);
    std::vector<int> tops;
    ProjectiveCover<F> c;
    for (auto& [v, x] : gens) {
        tops.push_back(v);
        c.generators.push_back(std::move(x));
    }
    c.projective = projective_sum(*m.alg, tops);
    c.map = yoneda_map(c.projective, m, m_basis_action, c.generators);
    return c;
}

template <class F>
ProjectiveCover<F> projective_cover(const Representation<F>& m) {
    return projective_cover(m, basis_action(m));
}

template <class F>
Inclusion<F> syzygy(const Representation<F>& m) {
    auto c = projective_cover(m);
    auto inc = submodule(c.projective.rep, kernel_spaces(c.map));
    inc.sub.label = "Omega(" + m.label + ")";
    return inc;
}

// Injective envelope using that each P_v has simple socle at v.
template <class F>
struct InjectiveHull {
    ProjectiveModule<F> injective;
    Morphism<F> map; // X -> I
};

template <class F>
InjectiveHull<F> injective_hull(const Representation<F>& x) {
    const auto& alg = *x.alg;
    auto soc = socle_spaces(x);
    std::vector<int> tops;
    std::vector<Morphism<F>> chosen;
    std::map<int, ProjectiveModule<F>> singles;
    for (int v = 0; v < x.num_vertices(); ++v) {
        const int s = static_cast<int>(soc[v].dim());
        if (s == 0) continue;
        auto psoc = projective_socle(alg, v);
        require(psoc.size() == 1, ErrorCode::AlgebraNotSelfInjective,
                "projective at " + alg.quiver.vertex_name(v) + " has non-simple socle");
        const auto& pv = singles[v] = projective_sum(alg, {v});
        // The socle element lives in e_v Λ e_v when P_v is the injective hull of S_v.
        int col = -1;
        for (const auto& [b, c] : psoc[0])
            if (alg.basis[b].target == v) col = pv.position[0][b];
        require(col >= 0, ErrorCode::AlgebraNotSelfInjective,
                "socle of projective at " + alg.quiver.vertex_name(v) + " is not at that vertex");
        Subspace<F> seen(s);
        for (const auto& f : hom_space(x, pv.rep)) {
            Matrix<F> img = soc[v].basis() * f.maps[v];
            std::vector<F> functional(s);
            for (int i = 0; i < s; ++i) functional[i] = img(i, col);
            if (seen.add(functional)) {
                tops.push_back(v);
                chosen.push_back(f);
                if (static_cast<int>(seen.dim()) == s) break;
            }
        }
        require(static_cast<int>(seen.dim()) == s, ErrorCode::AlgebraNotSelfInjective,
                "socle at " + alg.quiver.vertex_name(v) + " does not embed in projectives");
    }
    InjectiveHull<F> h;
    h.injective = projective_sum(alg, tops);
    h.map = zero_morphism(x, h.injective.rep);
    // Copy each chosen map into its summand block.
    for (int w = 0; w < x.num_vertices(); ++w) {
        for (std::size_t i = 0; i < h.injective.coords[w].size(); ++i) {
            auto [j, b] = h.injective.coords[w][i];
            const int src = singles.at(tops[j]).position[0][b];
            for (int r = 0; r < x.dims[w]; ++r) h.map.maps[w](r, i) = chosen[j].maps[w](r, src);
        }
    }
    for (const auto& k : kernel_spaces(h.map))
        require(k.dim() == 0, ErrorCode::AlgebraNotSelfInjective, "injective hull map is not injective");
    return h;
}

template <class F>
Representation<F> cosyzygy(const Representation<F>& x) {
    auto h = injective_hull(x);
    auto q = quotient(h.injective.rep, image_spaces(h.map, h.injective.rep)).quotient;
    q.label = "Omega^-1(" + x.label + ")";
    return q;
}

template <class F>
Representation<F> syzygy_power(Representation<F> m, int k) {
    for (int i = 0; i < k; ++i) m = syzygy(m).sub;
    for (int i = 0; i < -k; ++i) m = cosyzygy(m);
    return m;
}

// Minimal projective resolution P_k -> ... -> P_0 -> M. For k >= 1 the
// generator j of P_k maps to differential[k][j] in (P_{k-1}) at tops[j].
template <class F>
struct Resolution {
    std::vector<ProjectiveModule<F>> terms;
    std::vector<std::vector<std::vector<F>>> differential;
    std::vector<Representation<F>> syzygies; // syzygies[k] = Omega^k M
    std::vector<Inclusion<F>> inclusions;    // inclusions[k]: Omega^k M into P_{k-1}, k >= 1

    int length() const { return static_cast<int>(terms.size()) - 1; }
};

template <class F>
Resolution<F> resolve(const Representation<F>& m, int depth) {
    Resolution<F> r;
    r.syzygies.push_back(m);
    r.inclusions.emplace_back();
    r.differential.emplace_back();
    auto cover = projective_cover(m);
    r.terms.push_back(cover.projective);
    for (int k = 1; k <= depth; ++k) {
        auto inc = submodule(r.terms.back().rep, kernel_spaces(cover.map));
        inc.sub.label = "Omega^" + std::to_string(k) + "(" + m.label + ")";
        cover = projective_cover(inc.sub);
        std::vector<std::vector<F>> ys;
        for (std::size_t j = 0; j < cover.generators.size(); ++j) {
            const int v = cover.projective.tops[j];
            ys.push_back(row_times(cover.generators[j], inc.map.maps[v]));
        }
        r.differential.push_back(std::move(ys));
        r.syzygies.push_back(inc.sub);
        r.inclusions.push_back(std::move(inc));
        r.terms.push_back(cover.projective);
    }
    return r;
}

// Matrix of Hom(d_k, N): Hom(P_{k-1}, N) -> Hom(P_k, N), with Hom(P, N)
// identified with the sum of N at the tops.
template <class F>
Matrix<F> dual_differential(const Resolution<F>& r, int k, const Representation<F>& n,
                            const std::vector<Matrix<F>>& n_basis_action) {
    const auto& prev = r.terms[k - 1];
    const auto& cur = r.terms[k];
    const auto& alg = *n.alg;
    std::vector<int> row_off{0}, col_off{0};
    for (int v : prev.tops) row_off.push_back(row_off.back() + n.dims[v]);
    for (int v : cur.tops) col_off.push_back(col_off.back() + n.dims[v]);
    Matrix<F> d(row_off.back(), col_off.back());
    for (std::size_t j = 0; j < cur.tops.size(); ++j) {
        const int vj = cur.tops[j];
        const auto& y = r.differential[k][j];
        for (std::size_t l = 0; l < prev.tops.size(); ++l) {
            if (n.dims[prev.tops[l]] == 0 || n.dims[vj] == 0) continue;
            for (int b : alg.block(prev.tops[l], vj)) {
                const F& c = y[prev.position[l][b]];
                if (c.is_zero()) continue;
                const Matrix<F>& nb = n_basis_action[b];
                for (std::size_t p = 0; p < nb.rows(); ++p)
                    for (std::size_t q = 0; q < nb.cols(); ++q)
                        if (!nb(p, q).is_zero()) d(row_off[l] + p, col_off[j] + q) += c * nb(p, q);
            }
        }
    }
    return d;
}

template <class F>
int hom_from_projective_dim(const ProjectiveModule<F>& p, const Representation<F>& n) {
    int h = 0;
    for (int v : p.tops) h += n.dims[v];
    return h;
}

// Ext^i(M, N) from the complex Hom(P_*, N); needs a resolution of length i + 1.
template <class F>
int ext_via_resolution(const Resolution<F>& r, int i, const Representation<F>& n,
                       const std::vector<Matrix<F>>& n_basis_action) {
    require(i >= 0 && i + 1 <= r.length(), ErrorCode::InvalidArgument, "resolution too short");
    const int h = hom_from_projective_dim(r.terms[i], n);
    const int in_rank = i == 0 ? 0 : static_cast<int>(rank(dual_differential(r, i, n, n_basis_action)));
    const int out_rank = static_cast<int>(rank(dual_differential(r, i + 1, n, n_basis_action)));
    return h - in_rank - out_rank;
}

// Maps X -> N that factor through the injective hull of X.
template <class F>
std::vector<Morphism<F>> maps_through_hull(const Representation<F>& x, const InjectiveHull<F>& hull,
                                           const Representation<F>& n, const std::vector<Matrix<F>>& n_basis_action) {
    std::vector<Morphism<F>> out;
    const auto& tops = hull.injective.tops;
    for (std::size_t j = 0; j < tops.size(); ++j)
        for (int c = 0; c < n.dims[tops[j]]; ++c) {
            std::vector<std::vector<F>> images;
            for (std::size_t l = 0; l < tops.size(); ++l) images.emplace_back(n.dims[tops[l]], F(0));
            images[j][c] = F(1);
            out.push_back(compose(hull.map, yoneda_map(hull.injective, n, n_basis_action, images)));
        }
    (void)x;
    return out;
}

template <class F>
int span_rank(const std::vector<Morphism<F>>& maps) {
    if (maps.empty()) return 0;
    Matrix<F> m;
    for (const auto& f : maps) m.append_row(f.flatten());
    if (m.cols() == 0) return 0;
    return static_cast<int>(rank(m));
}

// Ext^i(M, N) = stable Hom(Omega^i M, N) for i >= 1.
template <class F>
int ext_via_stable_hom(const Representation<F>& omega, const InjectiveHull<F>& hull, const Representation<F>& n,
                       const std::vector<Matrix<F>>& n_basis_action) {
    const int h = static_cast<int>(hom_space(omega, n).size());
    return h - span_rank(maps_through_hull(omega, hull, n, n_basis_action));
}

enum class ExtMethod { Resolution, StableHom, Both };

// Caches resolutions, hulls and basis actions per module. Call prepare() for
// every handle before reading from several threads.
template <class F>
class ExtEngine {
public:
    explicit ExtEngine(const BoundedAlgebra<F>& alg) : alg_(&alg) {}

    int add(Representation<F> m) {
        entries_.push_back(Entry{std::move(m), {}, {}, {}, -1});
        return static_cast<int>(entries_.size()) - 1;
    }

    const Representation<F>& module(int h) const { return entries_.at(h).module; }
    int size() const { return static_cast<int>(entries_.size()); }

    void prepare(int h, int max_degree) {
        Entry& e = entries_.at(h);
        if (e.basis_action.empty() && e.module.dim() > 0) e.basis_action = basis_action(e.module);
        if (e.prepared >= max_degree) return;
        e.resolution = resolve(e.module, max_degree + 1);
        e.hulls.clear();
        e.hulls.emplace_back(); // degree 0 unused
        for (int i = 1; i <= max_degree; ++i) e.hulls.push_back(injective_hull(e.resolution.syzygies[i]));
        e.prepared = max_degree;
    }

    void prepare_all(int max_degree) {
        for (int h = 0; h < size(); ++h) prepare(h, max_degree);
    }

    int ext(int i, int m, int n, ExtMethod method = ExtMethod::Both) const {
        const Entry& em = entries_.at(m);
        const Entry& en = entries_.at(n);
        require(em.prepared >= i, ErrorCode::InvalidArgument, "module not prepared to this degree");
        if (en.module.dim() == 0 || em.module.dim() == 0) return 0;
        require(!en.basis_action.empty(), ErrorCode::InvalidArgument, "target module not prepared");
        if (method == ExtMethod::Resolution) return ext_via_resolution(em.resolution, i, en.module, en.basis_action);
        require(i >= 1, ErrorCode::InvalidArgument, "stable Hom computes Ext only in positive degree");
        const int b = ext_via_stable_hom(em.resolution.syzygies[i], em.hulls[i], en.module, en.basis_action);
        if (method == ExtMethod::StableHom) return b;
        const int a = ext_via_resolution(em.resolution, i, en.module, en.basis_action);
        if (a != b)
            fail(ErrorCode::MethodMismatch, "Ext^" + std::to_string(i) + "(" + em.module.label + ", " +
                                                en.module.label + "): " + std::to_string(a) + " vs " +
                                                std::to_string(b));
        return a;
    }

    const Resolution<F>& resolution(int h) const { return entries_.at(h).resolution; }

private:
    struct Entry {
        Representation<F> module;
        std::vector<Matrix<F>> basis_action;
        Resolution<F> resolution;
        std::vector<InjectiveHull<F>> hulls;
        int prepared;
    };
    const BoundedAlgebra<F>* alg_;
    std::vector<Entry> entries_;
};

template <class F>
int ext_dim(int i, const Representation<F>& m, const Representation<F>& n, ExtMethod method = ExtMethod::Both) {
    ExtEngine<F> e(*m.alg);
    int hm = e.add(m), hn = e.add(n);
    e.prepare(hm, i);
    e.prepare(hn, 0);
    return e.ext(i, hm, hn, method);
}

template <class F>
bool is_invertible_morphism(const Morphism<F>& f) {
    for (const auto& m : f.maps) {
        if (m.rows() != m.cols()) return false;
        if (m.rows() && rank(m) != m.rows()) return false;
    }
    return true;
}

// Random combinations first over infinite fields; the pairwise fallback
// decides the question whenever M is indecomposable.
template <class F>
bool is_isomorphic(const Representation<F>& m, const Representation<F>& n, std::uint64_t seed = 0x5eed) {
    if (m.dims != n.dims) return false;
    if (m.dim() == 0) return true;
    auto hmn = hom_space(m, n);
    if (hmn.empty()) return false;
    for (const auto& f : hmn)
        if (is_invertible_morphism(f)) return true;
    if constexpr (field_traits<F>::infinite) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> coeff(-1000, 1000);
        for (int attempt = 0; attempt < 8; ++attempt) {
            Morphism<F> g = zero_morphism(m, n);
            for (const auto& f : hmn) g = add(g, f, F(coeff(rng)));
            if (is_invertible_morphism(g)) return true;
        }
    }
    auto hnm = hom_space(n, m);
    for (const auto& f : hmn)
        for (const auto& g : hnm)
            if (is_invertible_morphism(compose(f, g))) return true;
    if constexpr (!field_traits<F>::infinite) {
        std::mt19937_64 rng(seed);
        const auto p = Zp::modulus();
        std::uniform_int_distribution<std::int64_t> coeff(0, static_cast<std::int64_t>(p) - 1);
        for (int attempt = 0; attempt < 8; ++attempt) {
            Morphism<F> g = zero_morphism(m, n);
            for (const auto& f : hmn) g = add(g, f, F(coeff(rng)));
            if (is_invertible_morphism(g)) return true;
        }
    }
    return false;
}

// Gabriel arrows v -> w; the walk is realisable only when each step is unique.
template <class F>
std::vector<int> gabriel_arrows_between(const BoundedAlgebra<F>& alg, int v, int w) {
    std::vector<int> out;
    for (int a : alg.quiver.out_arrows(v))
        if (alg.gabriel[a] && alg.quiver.arrow(a).target == w) out.push_back(a);
    return out;
}

template <class F>
std::string walk_label(const BoundedAlgebra<F>& alg, const std::vector<int>& walk) {
    if (walk.size() == 1) return "S(" + alg.quiver.vertex_name(walk[0]) + ")";
    std::string s = "U(";
    for (std::size_t i = 0; i < walk.size(); ++i) s += (i ? "," : "") + alg.quiver.vertex_name(walk[i]);
    return s + ")";
}

// The uniserial module with composition factors along a vertex walk, as the
// quotient of P(walk[0]) by everything leaving the chosen path.
template <class F>
Representation<F> uniserial(const BoundedAlgebra<F>& alg, const std::vector<int>& walk) {
    require(!walk.empty(), ErrorCode::InvalidArgument, "empty vertex walk");
    if (walk.size() == 1) return simple(alg, walk[0]);
    const int v0 = walk[0];
    auto p = projective_sum(alg, {v0});
    auto to_vec = [&](const SparseVec<F>& x, int w) {
        std::vector<F> out(p.rep.dims[w], F(0));
        for (const auto& [b, c] : x) out[p.position[0][b]] = c;
        return out;
    };
    std::vector<std::pair<int, std::vector<F>>> killed;
    SparseVec<F> x = alg.unit(alg.idempotent(v0));
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        const int v = walk[i], w = walk[i + 1];
        auto arrows = gabriel_arrows_between(alg, v, w);
        require(arrows.size() == 1, ErrorCode::NotRealizable,
                walk_label(alg, walk) + ": " + std::to_string(arrows.size()) + " Gabriel arrows from " +
                    alg.quiver.vertex_name(v) + " to " + alg.quiver.vertex_name(w));
        for (int b : alg.quiver.out_arrows(v))
            if (alg.gabriel[b] && b != arrows[0]) {
                auto y = alg.act(x, b);
                if (!y.empty()) killed.emplace_back(alg.quiver.arrow(b).target, to_vec(y, alg.quiver.arrow(b).target));
            }
        x = alg.act(x, arrows[0]);
        require(!x.empty(), ErrorCode::NotRealizable, walk_label(alg, walk) + ": path vanishes");
    }
    for (int b : alg.quiver.out_arrows(walk.back()))
        if (alg.gabriel[b]) {
            auto y = alg.act(x, b);
            if (!y.empty()) killed.emplace_back(alg.quiver.arrow(b).target, to_vec(y, alg.quiver.arrow(b).target));
        }
    auto u = quotient(p.rep, generated_spaces(p.rep, killed)).quotient;
    auto word = uniserial_word(u);
    require(word && *word == walk, ErrorCode::NotRealizable, walk_label(alg, walk) + " is not realised");
    u.label = walk_label(alg, walk);
    return u;
}

template <class F>
struct Subquotient {
    Representation<F> module;
    std::vector<int> walk;
};

// rad^s U / rad^t U for 0 <= s < t <= length.
template <class F>
std::vector<Subquotient<F>> subquotients(const Representation<F>& u) {
    auto word = uniserial_word(u);
    require(word.has_value(), ErrorCode::NotUniserial, u.label + " is not uniserial");
    auto series = radical_series(u);
    const int len = static_cast<int>(word->size());
    std::vector<Subquotient<F>> out;
    for (int s = 0; s < len; ++s) {
        auto inc = submodule(u, series[s]);
        for (int t = s + 1; t <= len; ++t) {
            auto q = quotient(inc.sub, restrict_spaces(inc, series[t])).quotient;
            std::vector<int> walk(word->begin() + s, word->begin() + t);
            q.label = walk_label(*u.alg, walk);
            out.push_back({std::move(q), std::move(walk)});
        }
    }
    return out;
}

// Non-split extension 0 -> N -> E -> M -> 0 built as a pushout along
// Omega M -> P_0, with the splitting test as certificate.
template <class F>
struct ExtensionWitness {
    Representation<F> middle;
    std::vector<int> middle_dims;
    int hom_m_e = 0;
    int hom_m_n = 0;
    int end_m = 0;
    bool certified() const { return hom_m_e < hom_m_n + end_m; }
};

template <class F>
std::optional<ExtensionWitness<F>> ext1_witness(const Representation<F>& m, const Representation<F>& n) {
    auto cover = projective_cover(m);
    auto inc = submodule(cover.projective.rep, kernel_spaces(cover.map));
    const auto& omega = inc.sub;
    auto n_action = basis_action(n);
    std::vector<Morphism<F>> factoring;
    const auto& tops = cover.projective.tops;
    for (std::size_t j = 0; j < tops.size(); ++j)
        for (int c = 0; c < n.dims[tops[j]]; ++c) {
            std::vector<std::vector<F>> images;
            for (int v : tops) images.emplace_back(n.dims[v], F(0));
            images[j][c] = F(1);
            factoring.push_back(compose(inc.map, yoneda_map(cover.projective, n, n_action, images)));
        }
    const int base = span_rank(factoring);
    for (const auto& phi : hom_space(omega, n)) {
        auto trial = factoring;
        trial.push_back(phi);
        if (span_rank(trial) == base) continue;
        auto sum = direct_sum(cover.projective.rep, n);
        Morphism<F> into;
        for (int v = 0; v < m.num_vertices(); ++v)
            into.maps.push_back(hstack(inc.map.maps[v], F(-1) * phi.maps[v]));
        ExtensionWitness<F> w;
        w.middle = quotient(sum, image_spaces(into, sum)).quotient;
        w.middle.label = "E(" + m.label + ", " + n.label + ")";
        w.middle_dims = w.middle.dims;
        w.hom_m_e = static_cast<int>(hom_space(m, w.middle).size());
        w.hom_m_n = static_cast<int>(hom_space(m, n).size());
        w.end_m = static_cast<int>(hom_space(m, m).size());
        return w;
    }
    return std::nullopt;
}

} // namespace wsa
