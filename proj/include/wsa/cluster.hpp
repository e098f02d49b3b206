#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "homological.hpp"
#include "parallel.hpp"

namespace wsa {

template <class F>
struct Summand {
    std::string label;
    std::string kind; // projective, simple, omega2
    int vertex = -1;
    Representation<F> module;
};

// Λ, the simples on Γ and Ω²(S_ν) off Γ.
template <class F>
std::vector<Summand<F>> build_M(const BoundedAlgebra<F>& alg, const std::vector<int>& gamma) {
    std::vector<Summand<F>> out;
    const Quiver& q = alg.quiver;
    std::vector<char> in_gamma(q.num_vertices(), 0);
    for (int v : gamma) in_gamma[v] = 1;
    for (int v = 0; v < q.num_vertices(); ++v) {
        auto p = projective(alg, v);
        out.push_back({p.label, "projective", v, std::move(p)});
    }
    for (int v : gamma) {
        auto s = simple(alg, v);
        out.push_back({s.label, "simple", v, std::move(s)});
    }
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (in_gamma[v]) continue;
        auto u = syzygy_power(simple(alg, v), 2);
        u.label = "Omega^2(S(" + q.vertex_name(v) + "))";
        out.push_back({u.label, "omega2", v, std::move(u)});
    }
    return out;
}

template <class F>
bool pairwise_non_isomorphic(const std::vector<Summand<F>>& s, std::uint64_t seed = 0x5eed) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i].module.dims == s[j].module.dims && is_isomorphic(s[i].module, s[j].module, seed)) return false;
    return true;
}

struct ExtTable {
    std::vector<std::vector<int>> ext1, ext2; // [i][j] = Ext^k(X_i, X_j)
    bool all_zero = true;
    bool symmetric = true; // Ext^2(X_i, X_j) = Ext^1(X_j, X_i)
};

// Ext^1, Ext^2 from each row module to each column module.
template <class F>
ExtTable ext_table(const ExtEngine<F>& eng, const std::vector<int>& rows, const std::vector<int>& cols, int jobs) {
    ExtTable t;
    t.ext1.assign(rows.size(), std::vector<int>(cols.size(), 0));
    t.ext2 = t.ext1;
    parallel_for(rows.size() * cols.size(), jobs, [&](std::size_t k) {
        const std::size_t i = k / cols.size(), j = k % cols.size();
        t.ext1[i][j] = eng.ext(1, rows[i], cols[j]);
        t.ext2[i][j] = eng.ext(2, rows[i], cols[j]);
    });
    for (const auto* tab : {&t.ext1, &t.ext2})
        for (const auto& r : *tab)
            for (int x : r)
                if (x) t.all_zero = false;
    if (rows == cols)
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (t.ext2[i][j] != t.ext1[j][i]) t.symmetric = false;
    return t;
}

template <class F>
struct Candidate {
    Representation<F> module;
    std::vector<int> walk;
    int multiplicity = 0;
    std::vector<std::string> sources; // the U_ν it was cut from
    int summand = -1;                 // index of an isomorphic summand of M
};

// Subquotients of the U_ν = Ω²(S_ν), ν ∉ Γ, with top and socle on Γ, up to isomorphism.
template <class F>
std::vector<Candidate<F>> enumerate_star_candidates(const BoundedAlgebra<F>& alg, const std::vector<int>& gamma,
                                                   std::uint64_t seed = 0x5eed) {
    const Quiver& q = alg.quiver;
    std::vector<char> in_gamma(q.num_vertices(), 0);
    for (int v : gamma) in_gamma[v] = 1;
    std::vector<Candidate<F>> out;
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (in_gamma[v]) continue;
        auto u = syzygy_power(simple(alg, v), 2);
        const std::string source = "U(" + q.vertex_name(v) + ")";
        if (!uniserial_word(u)) fail(ErrorCode::UNotUniserial, "Omega^2(S(" + q.vertex_name(v) + ")) is not uniserial");
        for (auto& sq : subquotients(u)) {
            if (!in_gamma[sq.walk.front()] || !in_gamma[sq.walk.back()]) continue;
            Candidate<F>* match = nullptr;
            for (auto& c : out)
                if (c.module.dims == sq.module.dims && c.walk == sq.walk && is_isomorphic(c.module, sq.module, seed)) {
                    match = &c;
                    break;
                }
            if (!match)
                for (auto& c : out)
                    if (c.module.dims == sq.module.dims && is_isomorphic(c.module, sq.module, seed)) {
                        match = &c;
                        break;
                    }
            if (!match) {
                out.push_back({std::move(sq.module), std::move(sq.walk), 0, {}, -1});
                match = &out.back();
            }
            ++match->multiplicity;
            if (std::find(match->sources.begin(), match->sources.end(), source) == match->sources.end())
                match->sources.push_back(source);
        }
    }
    return out;
}

template <class F>
void match_summands(std::vector<Candidate<F>>& cands, const std::vector<Summand<F>>& summands,
                    std::uint64_t seed = 0x5eed) {
    for (auto& c : cands)
        for (std::size_t j = 0; j < summands.size(); ++j)
            if (summands[j].module.dims == c.module.dims && is_isomorphic(summands[j].module, c.module, seed)) {
                c.summand = static_cast<int>(j);
                break;
            }
}

enum class Verdict { ThreeClusterTilting, FailsWithWitness };

inline std::string to_string(Verdict v) {
    return v == Verdict::ThreeClusterTilting ? "three-cluster-tilting" : "fails-with-witness";
}

struct ExtPair {
    std::string left, right;
    int dim = 0;
};

struct WitnessInfo {
    std::string left, right; // Ext^1(left, right) != 0
    int ext1 = 0;
    std::vector<int> middle_dims;
    int hom_m_e = 0, hom_m_n = 0, end_m = 0;
    bool certified = false;
};

struct ClusterOptions {
    int jobs = 1;
    std::uint64_t seed = 0x5eed; // isomorphism tests
};

template <class F>
struct ClusterReport {
    std::vector<int> gamma;
    std::vector<Summand<F>> summands;
    bool summands_distinct = false;
    ExtTable m_table;
    std::vector<Candidate<F>> candidates;
    ExtTable ext_to_candidates; // rows: summands, columns: candidates
    Verdict verdict = Verdict::ThreeClusterTilting;
    std::vector<ExtPair> nonzero_pairs; // over summands of M and extra candidates
    std::optional<WitnessInfo> witness;
    int ext_evaluations = 0; // each one cross-checked by both methods

    bool all_candidates_in_M() const {
        for (const auto& c : candidates)
            if (c.summand < 0) return false;
        return true;
    }
};

template <class F>
ClusterReport<F> cluster_analysis(const BoundedAlgebra<F>& alg, const std::vector<int>& gamma,
                                  const ClusterOptions& opt = {}) {
    ClusterReport<F> r;
    r.gamma = gamma;
    r.summands = build_M(alg, gamma);
    r.summands_distinct = pairwise_non_isomorphic(r.summands, opt.seed);
    r.candidates = enumerate_star_candidates(alg, gamma, opt.seed);
    match_summands(r.candidates, r.summands, opt.seed);

    ExtEngine<F> eng(alg);
    std::vector<int> m_handles, c_handles, extra_handles;
    std::vector<std::string> labels;
    for (const auto& s : r.summands) {
        m_handles.push_back(eng.add(s.module));
        labels.push_back(s.label);
    }
    for (const auto& c : r.candidates) c_handles.push_back(eng.add(c.module));
    std::vector<int> all = m_handles;
    for (std::size_t i = 0; i < r.candidates.size(); ++i)
        if (r.candidates[i].summand < 0) {
            extra_handles.push_back(c_handles[i]);
            all.push_back(c_handles[i]);
            labels.push_back(r.candidates[i].module.label);
        }
    parallel_for(eng.size(), opt.jobs, [&](std::size_t h) { eng.prepare(static_cast<int>(h), 2); });

    r.m_table = ext_table(eng, m_handles, m_handles, opt.jobs);
    r.ext_to_candidates = ext_table(eng, m_handles, c_handles, opt.jobs);
    r.ext_evaluations = 2 * static_cast<int>(m_handles.size() * (m_handles.size() + c_handles.size()));

    const bool ok = r.m_table.all_zero && r.all_candidates_in_M();
    r.verdict = ok ? Verdict::ThreeClusterTilting : Verdict::FailsWithWitness;
    if (ok) return r;

    ExtTable full = ext_table(eng, all, all, opt.jobs);
    r.ext_evaluations += 2 * static_cast<int>(all.size() * all.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            if (full.ext1[i][j]) r.nonzero_pairs.push_back({labels[i], labels[j], full.ext1[i][j]});
    for (std::size_t i = 0; i < all.size() && !r.witness; ++i)
        for (std::size_t j = 0; j < all.size() && !r.witness; ++j) {
            if (!full.ext1[i][j]) continue;
            auto w = ext1_witness(eng.module(all[i]), eng.module(all[j]));
            if (!w) continue;
            r.witness = WitnessInfo{labels[i], labels[j], full.ext1[i][j], w->middle_dims,
                                    w->hom_m_e,  w->hom_m_n,  w->end_m,          w->certified()};
        }
    return r;
}

// Verdicts for the named families where one is known; nullopt otherwise.
inline std::optional<Verdict> expected_verdict(const SurfaceSpec& s) {
    if (s.family == "triangle" || s.family == "spherical") return Verdict::ThreeClusterTilting;
    if (s.family == "triangular")
        return s.k >= 2 ? Verdict::FailsWithWitness : Verdict::ThreeClusterTilting;
    if (s.family == "n-spherical" && s.m == 1 && s.m2 == 1)
        return s.n >= 3 ? Verdict::FailsWithWitness : Verdict::ThreeClusterTilting;
    return std::nullopt;
}

struct PeriodCheck {
    std::string vertex;
    bool isomorphic = false;
};

struct SymmetryCase {
    std::string left, right;
    int ext2_lr = 0, ext1_rl = 0;
};

struct ChainStep {
    std::string t;          // scalar in y_i = ρ_iδ_i - t A'_{σ_i}
    bool solvable = false;  // x_i ρ_iδ_i is a multiple of x_i A'_{σ_i}
    bool xy_zero = false;
    bool yx_zero = false;
    int x_length = 0, y_length = 0; // longest nonzero monomials from a_i
    bool socle_proportional = false;
};

struct CornerAudit {
    std::vector<ChainStep> steps;
    int corner_dim = 0;
    int monomial_rank = 0;

    bool ok() const {
        for (const auto& s : steps)
            if (!(s.solvable && s.xy_zero && s.yx_zero && s.socle_proportional)) return false;
        return monomial_rank == corner_dim;
    }
};

struct AuditRecord {
    std::vector<PeriodCheck> period;
    std::vector<SymmetryCase> symmetry;
    std::optional<CornerAudit> corner;
    bool candidate_hom_ok = true;   // Hom(S_ν, X) = 0 = Hom(X, S_ν), ν ∉ Γ
    bool omega_hom_ok = true;       // Hom(Ω X, S_γ) = 0, γ ∈ Γ, X in add(M)

    bool period_ok() const {
        for (const auto& p : period)
            if (!p.isomorphic) return false;
        return true;
    }
    bool symmetry_ok() const {
        for (const auto& s : symmetry)
            if (s.ext2_lr != s.ext1_rl) return false;
        return true;
    }
    bool ok() const {
        return period_ok() && symmetry_ok() && (!corner || corner->ok()) && candidate_hom_ok && omega_hom_ok;
    }
};

// x_i = γ_iσ_i and y_i = ρ_iδ_i - t A'_{σ_i} in eΛe, e = sum of e_{a_i}.
template <class F>
CornerAudit corner_audit(const BoundedAlgebra<F>& alg, const ArrowClassification& cls, const SphericalChain& ch) {
    const int n = static_cast<int>(ch.gamma.size());
    require(static_cast<int>(ch.a.size()) == n, ErrorCode::InvalidArgument, "chain is not closed");
    CornerAudit out;
    std::vector<SparseVec<F>> x(n), y(n);
    auto next = [&](int i) { return (i + 1) % n; };
    auto prev = [&](int i) { return (i + n - 1) % n; };
    for (int i = 0; i < n; ++i) {
        ChainStep st;
        x[i] = alg.path(ch.a[i], {ch.gamma[i], ch.sigma[i]});
        auto rd = alg.path(ch.a[next(i)], {ch.rho[i], ch.delta[i]});
        auto ap = alg.path(ch.a[next(i)], paths_B_A(cls, ch.sigma[i]).A_prime);
        auto u = alg.multiply(x[i], rd);
        auto w = alg.multiply(x[i], ap);
        F t(0);
        if (!w.empty()) {
            F lead(0);
            for (const auto& [b, c] : u)
                if (b == w[0].first) lead = c;
            t = lead / w[0].second;
        }
        st.solvable = sparse_axpy(u, -t, w).empty();
        st.t = t.to_string();
        y[i] = sparse_axpy(rd, -t, ap);
        st.xy_zero = alg.multiply(x[i], y[i]).empty();
        st.yx_zero = alg.multiply(y[i], x[i]).empty();
        out.steps.push_back(st);
    }
    std::vector<SparseVec<F>> monomials;
    for (int i = 0; i < n; ++i) monomials.push_back(alg.unit(alg.idempotent(ch.a[i])));
    for (int i = 0; i < n; ++i) {
        SparseVec<F> xm = x[i], ym = y[prev(i)];
        int j = i, lx = 0;
        SparseVec<F> last_x, last_y;
        while (!xm.empty()) {
            monomials.push_back(xm);
            last_x = xm;
            ++lx;
            j = next(j);
            xm = alg.multiply(xm, x[j]);
        }
        j = prev(i);
        int ly = 0;
        while (!ym.empty()) {
            monomials.push_back(ym);
            last_y = ym;
            ++ly;
            j = prev(j);
            ym = alg.multiply(ym, y[j]);
        }
        out.steps[i].x_length = lx;
        out.steps[i].y_length = ly;
        if (!last_x.empty() && !last_y.empty()) {
            Matrix<F> pair(2, alg.dim());
            for (const auto& [b, c] : last_x) pair(0, b) = c;
            for (const auto& [b, c] : last_y) pair(1, b) = c;
            out.steps[i].socle_proportional = rank(pair) == 1;
        }
    }
    std::vector<char> in_e(alg.num_vertices(), 0);
    for (int v : ch.a) in_e[v] = 1;
    for (const auto& bp : alg.basis)
        if (in_e[bp.source] && in_e[bp.target]) ++out.corner_dim;
    Matrix<F> span(monomials.size(), alg.dim());
    for (std::size_t r = 0; r < monomials.size(); ++r)
        for (const auto& [b, c] : monomials[r]) span(r, b) = c;
    out.monomial_rank = static_cast<int>(rank(span));
    return out;
}

struct AuditOptions {
    std::uint64_t seed = 0x5eed;
    int pairs = 24;
    int jobs = 1;
};

template <class F>
AuditRecord audit(const BoundedAlgebra<F>& alg, const ArrowClassification& cls, const std::vector<int>& gamma,
                  const std::optional<SphericalChain>& chain, const std::vector<Candidate<F>>& candidates,
                  const AuditOptions& opt = {}) {
    AuditRecord rec;
    const Quiver& q = alg.quiver;
    const int nv = q.num_vertices();
    rec.period.resize(nv);
    parallel_for(nv, opt.jobs, [&](std::size_t v) {
        auto s = simple(alg, static_cast<int>(v));
        rec.period[v] = {q.vertex_name(static_cast<int>(v)), is_isomorphic(syzygy_power(s, 4), s, opt.seed)};
    });

    ExtEngine<F> eng(alg);
    for (int v = 0; v < nv; ++v) {
        auto s = simple(alg, v);
        for (int k : {0, 1, 2, -1}) {
            auto m = syzygy_power(s, k);
            if (k) m.label = "Omega^" + std::to_string(k) + "(" + s.label + ")";
            eng.add(std::move(m));
        }
    }
    for (const auto& c : candidates) eng.add(c.module);
    parallel_for(eng.size(), opt.jobs, [&](std::size_t h) { eng.prepare(static_cast<int>(h), 2); });
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> pick(0, eng.size() - 1);
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < opt.pairs; ++k) pairs.emplace_back(pick(rng), pick(rng));
    rec.symmetry.resize(pairs.size());
    parallel_for(pairs.size(), opt.jobs, [&](std::size_t k) {
        auto [a, b] = pairs[k];
        rec.symmetry[k] = {eng.module(a).label, eng.module(b).label, eng.ext(2, a, b), eng.ext(1, b, a)};
    });

    if (chain && chain->a.size() == chain->gamma.size()) rec.corner = corner_audit(alg, cls, *chain);

    std::vector<char> in_gamma(nv, 0);
    for (int v : gamma) in_gamma[v] = 1;
    for (const auto& c : candidates) {
        for (int v = 0; v < nv; ++v) {
            if (in_gamma[v]) continue;
            auto s = simple(alg, v);
            if (!hom_space(s, c.module).empty() || !hom_space(c.module, s).empty()) rec.candidate_hom_ok = false;
        }
        if (c.summand < 0) continue;
        auto omega = syzygy(c.module).sub;
        for (int v : gamma)
            if (!hom_space(omega, simple(alg, v)).empty()) rec.omega_hom_ok = false;
    }
    return rec;
}

} // namespace wsa
