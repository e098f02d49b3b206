#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace wsa {

// Right module: a space per vertex and, for each arrow s -> t, a
// dims[s] x dims[t] matrix acting on row vectors.
template <class F>
class Representation {
public:
    const BoundedAlgebra<F>* alg = nullptr;
    std::vector<int> dims;
    std::vector<Matrix<F>> act;
    std::string label;

    Representation() = default;
    Representation(const BoundedAlgebra<F>& a, std::vector<int> d) : alg(&a), dims(std::move(d)) {
        const Quiver& q = a.quiver;
        for (int x = 0; x < q.num_arrows(); ++x)
            act.emplace_back(dims[q.arrow(x).source], dims[q.arrow(x).target]);
    }

    int dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }
    int num_vertices() const { return static_cast<int>(dims.size()); }
    bool is_zero() const { return dim() == 0; }

    Matrix<F> path_matrix(int source, const Word& w) const {
        Matrix<F> m = Matrix<F>::identity(dims[source]);
        for (int a : w) m = m * act[a];
        return m;
    }

    // Action of an algebra element x in e_u Λ e_w, as a dims[u] x dims[w] matrix.
    Matrix<F> element_matrix(const SparseVec<F>& x, int u, int w) const {
        Matrix<F> m(dims[u], dims[w]);
        for (const auto& [b, c] : x) {
            const auto& bp = alg->basis[b];
            require(bp.source == u && bp.target == w, ErrorCode::DimensionMismatch, "element not in e_u A e_w");
            m = m + c * path_matrix(u, bp.word);
        }
        return m;
    }

    std::vector<F> act_vector(const std::vector<F>& v, int arrow) const { return row_times(v, act[arrow]); }
};

// Matrices of every basis path, indexed like the algebra basis.
template <class F>
std::vector<Matrix<F>> basis_action(const Representation<F>& m) {
    const auto& alg = *m.alg;
    std::vector<Matrix<F>> out(alg.dim());
    for (int b = 0; b < alg.dim(); ++b) {
        const auto& bp = alg.basis[b];
        if (bp.word.empty()) {
            out[b] = Matrix<F>::identity(m.dims[bp.source]);
            continue;
        }
        Word prefix(bp.word.begin(), bp.word.end() - 1);
        auto pre = alg.basis_index(prefix, bp.source);
        out[b] = pre ? out[*pre] * m.act[bp.word.back()] : m.path_matrix(bp.source, bp.word);
    }
    return out;
}

// Per-vertex matrices; maps[v] is dims_M[v] x dims_N[v].
template <class F>
struct Morphism {
    std::vector<Matrix<F>> maps;

    std::vector<F> flatten() const {
        std::vector<F> out;
        for (const auto& m : maps)
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
        return out;
    }
    bool is_zero() const {
        for (const auto& m : maps)
            if (!m.is_zero()) return false;
        return true;
    }
};

template <class F>
Morphism<F> zero_morphism(const Representation<F>& m, const Representation<F>& n) {
    Morphism<F> f;
    for (int v = 0; v < m.num_vertices(); ++v) f.maps.emplace_back(m.dims[v], n.dims[v]);
    return f;
}

template <class F>
Morphism<F> identity_morphism(const Representation<F>& m) {
    Morphism<F> f;
    for (int v = 0; v < m.num_vertices(); ++v) f.maps.push_back(Matrix<F>::identity(m.dims[v]));
    return f;
}

// x -> x f g
template <class F>
Morphism<F> compose(const Morphism<F>& f, const Morphism<F>& g) {
    Morphism<F> h;
    for (std::size_t v = 0; v < f.maps.size(); ++v) h.maps.push_back(f.maps[v] * g.maps[v]);
    return h;
}

template <class F>
Morphism<F> add(const Morphism<F>& f, const Morphism<F>& g, const F& c = F(1)) {
    Morphism<F> h = f;
    for (std::size_t v = 0; v < f.maps.size(); ++v) h.maps[v] = h.maps[v] + c * g.maps[v];
    return h;
}

template <class F>
bool is_morphism(const Representation<F>& m, const Representation<F>& n, const Morphism<F>& f) {
    const Quiver& q = m.alg->quiver;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrow(a).source, t = q.arrow(a).target;
        if (!(m.act[a] * f.maps[t] == f.maps[s] * n.act[a])) return false;
    }
    return true;
}

template <class F>
bool satisfies_relations(const Representation<F>& m) {
    for (const auto& r : m.alg->relations) {
        Matrix<F> sum(m.dims[r.source], m.dims[r.target]);
        for (const auto& t : r.terms) sum = sum + t.coeff * m.path_matrix(r.source, t.path);
        if (!sum.is_zero()) return false;
    }
    return true;
}

template <class F>
Representation<F> zero_module(const BoundedAlgebra<F>& alg) {
    return Representation<F>(alg, std::vector<int>(alg.num_vertices(), 0));
}

template <class F>
Representation<F> simple(const BoundedAlgebra<F>& alg, int v) {
    std::vector<int> d(alg.num_vertices(), 0);
    d[v] = 1;
    Representation<F> s(alg, d);
    s.label = "S(" + alg.quiver.vertex_name(v) + ")";
    return s;
}

// P = direct sum of e_{v_j} Λ over the listed tops. The space at w has basis
// the pairs (j, b) with b a basis path from v_j to w.
template <class F>
struct ProjectiveModule {
    Representation<F> rep;
    std::vector<int> tops;
    std::vector<std::vector<std::pair<int, int>>> coords; // coords[w][i] = (j, b)
    std::vector<std::vector<int>> position;               // position[j][b], or -1

    // Position of the generator e_{v_j} in the space at v_j.
    int generator_position(int j) const { return position[j][rep.alg->idempotent(tops[j])]; }
};

template <class F>
ProjectiveModule<F> projective_sum(const BoundedAlgebra<F>& alg, const std::vector<int>& tops) {
    const int nv = alg.num_vertices();
    ProjectiveModule<F> p;
    p.tops = tops;
    p.coords.assign(nv, {});
    p.position.assign(tops.size(), std::vector<int>(alg.dim(), -1));
    for (int w = 0; w < nv; ++w)
        for (std::size_t j = 0; j < tops.size(); ++j)
            for (int b : alg.block(tops[j], w)) {
                p.position[j][b] = static_cast<int>(p.coords[w].size());
                p.coords[w].push_back({static_cast<int>(j), b});
            }
    std::vector<int> dims(nv);
    for (int w = 0; w < nv; ++w) dims[w] = static_cast<int>(p.coords[w].size());
    p.rep = Representation<F>(alg, dims);
    for (int a = 0; a < alg.quiver.num_arrows(); ++a) {
        int s = alg.quiver.arrow(a).source;
        for (std::size_t i = 0; i < p.coords[s].size(); ++i) {
            auto [j, b] = p.coords[s][i];
            for (const auto& [b2, c] : alg.arrow_action[b][a]) p.rep.act[a](i, p.position[j][b2]) = c;
        }
    }
    std::string label;
    for (std::size_t j = 0; j < tops.size(); ++j) label += (j ? "+" : "") + ("P(" + alg.quiver.vertex_name(tops[j]) + ")");
    p.rep.label = label.empty() ? "0" : label;
    return p;
}

template <class F>
Representation<F> projective(const BoundedAlgebra<F>& alg, int v) {
    return projective_sum(alg, {v}).rep;
}

template <class F>
Representation<F> direct_sum(const Representation<F>& m, const Representation<F>& n) {
    std::vector<int> d(m.num_vertices());
    for (int v = 0; v < m.num_vertices(); ++v) d[v] = m.dims[v] + n.dims[v];
    Representation<F> s(*m.alg, d);
    for (std::size_t a = 0; a < m.act.size(); ++a) s.act[a] = block_diagonal(m.act[a], n.act[a]);
    s.label = m.label + "+" + n.label;
    return s;
}

template <class F>
using SpaceFamily = std::vector<Subspace<F>>; // one subspace per vertex

template <class F>
SpaceFamily<F> zero_spaces(const Representation<F>& m) {
    SpaceFamily<F> w;
    for (int v = 0; v < m.num_vertices(); ++v) w.emplace_back(m.dims[v]);
    return w;
}

template <class F>
SpaceFamily<F> whole_spaces(const Representation<F>& m) {
    SpaceFamily<F> w;
    for (int v = 0; v < m.num_vertices(); ++v) w.push_back(Subspace<F>::whole(m.dims[v]));
    return w;
}

template <class F>
int total_dim(const SpaceFamily<F>& w) {
    int d = 0;
    for (const auto& s : w) d += static_cast<int>(s.dim());
    return d;
}

template <class F>
bool is_closed(const Representation<F>& m, const SpaceFamily<F>& w) {
    const Quiver& q = m.alg->quiver;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrow(a).source, t = q.arrow(a).target;
        if (w[s].dim() == 0) continue;
        Matrix<F> img = w[s].basis() * m.act[a];
        for (std::size_t i = 0; i < img.rows(); ++i)
            if (!w[t].contains(img.row(i))) return false;
    }
    return true;
}

// Smallest submodule containing the given (vertex, vector) elements.
template <class F>
SpaceFamily<F> generated_spaces(const Representation<F>& m, const std::vector<std::pair<int, std::vector<F>>>& gens) {
    SpaceFamily<F> w = zero_spaces(m);
    std::vector<std::pair<int, std::vector<F>>> queue;
    for (const auto& g : gens)
        if (w[g.first].add(g.second)) queue.push_back(g);
    const Quiver& q = m.alg->quiver;
    while (!queue.empty()) {
        auto [v, x] = std::move(queue.back());
        queue.pop_back();
        for (int a : q.out_arrows(v)) {
            int t = q.arrow(a).target;
            auto y = m.act_vector(x, a);
            if (w[t].add(y)) queue.emplace_back(t, std::move(y));
        }
    }
    return w;
}

// Sum over arrows of the images: M J.
template <class F>
SpaceFamily<F> radical_spaces(const Representation<F>& m, const SpaceFamily<F>& within) {
    std::vector<Matrix<F>> rows(m.num_vertices());
    const Quiver& q = m.alg->quiver;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrow(a).source, t = q.arrow(a).target;
        if (within[s].dim() == 0) continue;
        rows[t] = vstack(rows[t], within[s].basis() * m.act[a]);
    }
    SpaceFamily<F> out;
    for (int v = 0; v < m.num_vertices(); ++v)
        out.push_back(rows[v].rows() ? Subspace<F>::span(rows[v]) : Subspace<F>(m.dims[v]));
    return out;
}

template <class F>
SpaceFamily<F> radical_spaces(const Representation<F>& m) {
    return radical_spaces(m, whole_spaces(m));
}

template <class F>
SpaceFamily<F> socle_spaces(const Representation<F>& m) {
    const Quiver& q = m.alg->quiver;
    SpaceFamily<F> out;
    for (int v = 0; v < m.num_vertices(); ++v) {
        Matrix<F> stacked(m.dims[v], 0);
        for (int a : q.out_arrows(v)) stacked = hstack(stacked, m.act[a]);
        if (stacked.cols() == 0) out.push_back(Subspace<F>::whole(m.dims[v]));
        else out.push_back(Subspace<F>::span(left_null_space(stacked)));
    }
    return out;
}

// rad^0 = M, rad^1, ..., ending with the zero family.
template <class F>
std::vector<SpaceFamily<F>> radical_series(const Representation<F>& m) {
    std::vector<SpaceFamily<F>> series{whole_spaces(m)};
    while (total_dim(series.back()) > 0) series.push_back(radical_spaces(m, series.back()));
    return series;
}

// Dimension vectors of rad^k / rad^{k+1}.
template <class F>
std::vector<std::vector<int>> loewy_layers(const Representation<F>& m) {
    auto series = radical_series(m);
    std::vector<std::vector<int>> layers;
    for (std::size_t k = 0; k + 1 < series.size(); ++k) {
        std::vector<int> d(m.num_vertices());
        for (int v = 0; v < m.num_vertices(); ++v)
            d[v] = static_cast<int>(series[k][v].dim() - series[k + 1][v].dim());
        layers.push_back(d);
    }
    return layers;
}

// Vertex sequence of the layers when every layer is simple.
template <class F>
std::optional<std::vector<int>> uniserial_word(const Representation<F>& m) {
    std::vector<int> word;
    for (const auto& layer : loewy_layers(m)) {
        int total = std::accumulate(layer.begin(), layer.end(), 0);
        if (total != 1) return std::nullopt;
        word.push_back(static_cast<int>(std::find(layer.begin(), layer.end(), 1) - layer.begin()));
    }
    return word;
}

template <class F>
struct Inclusion {
    Representation<F> sub;
    Morphism<F> map; // sub -> ambient
};

template <class F>
Inclusion<F> submodule(const Representation<F>& m, const SpaceFamily<F>& w) {
    require(is_closed(m, w), ErrorCode::InvalidArgument, "subspaces are not closed under the action");
    std::vector<int> d(m.num_vertices());
    for (int v = 0; v < m.num_vertices(); ++v) d[v] = static_cast<int>(w[v].dim());
    Inclusion<F> inc{Representation<F>(*m.alg, d), {}};
    const Quiver& q = m.alg->quiver;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrow(a).source, t = q.arrow(a).target;
        if (d[s] == 0 || d[t] == 0) continue;
        Matrix<F> img = w[s].basis() * m.act[a];
        inc.sub.act[a] = img.select_cols(w[t].pivots());
    }
    for (int v = 0; v < m.num_vertices(); ++v) inc.map.maps.push_back(w[v].basis());
    return inc;
}

template <class F>
struct Projection {
    Representation<F> quotient;
    Morphism<F> map; // ambient -> quotient
};

template <class F>
Projection<F> quotient(const Representation<F>& m, const SpaceFamily<F>& w) {
    require(is_closed(m, w), ErrorCode::InvalidArgument, "subspaces are not closed under the action");
    std::vector<QuotientBasis<F>> qb;
    std::vector<int> d(m.num_vertices());
    for (int v = 0; v < m.num_vertices(); ++v) {
        qb.push_back(quotient_basis(w[v]));
        d[v] = static_cast<int>(qb.back().columns.size());
    }
    Projection<F> p{Representation<F>(*m.alg, d), {}};
    const Quiver& q = m.alg->quiver;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrow(a).source, t = q.arrow(a).target;
        if (d[s] == 0 || d[t] == 0) continue;
        p.quotient.act[a] = m.act[a].select_rows(qb[s].columns) * qb[t].projection;
    }
    for (int v = 0; v < m.num_vertices(); ++v) p.map.maps.push_back(qb[v].projection);
    return p;
}

// Subspaces of M expressed in the coordinates of a submodule with inclusion `inc`.
template <class F>
SpaceFamily<F> restrict_spaces(const Inclusion<F>& inc, const SpaceFamily<F>& w) {
    SpaceFamily<F> out;
    for (int v = 0; v < inc.sub.num_vertices(); ++v) {
        Subspace<F> s(inc.sub.dims[v]);
        Subspace<F> amb = Subspace<F>::span(inc.map.maps[v]);
        // inc.map.maps[v] is already in reduced echelon form (rows of a Subspace basis)
        for (std::size_t i = 0; i < w[v].dim(); ++i) {
            auto x = w[v].basis().row(i);
            require(amb.contains(x), ErrorCode::InvalidArgument, "space not inside the submodule");
            s.add(amb.coordinates(x));
        }
        out.push_back(std::move(s));
    }
    return out;
}

// Kernel and image of a morphism, as subspace families.
template <class F>
SpaceFamily<F> kernel_spaces(const Morphism<F>& f) {
    SpaceFamily<F> out;
    for (const auto& m : f.maps) {
        if (m.cols() == 0) out.push_back(Subspace<F>::whole(m.rows()));
        else out.push_back(Subspace<F>::span(left_null_space(m)));
    }
    return out;
}

template <class F>
SpaceFamily<F> image_spaces(const Morphism<F>& f, const Representation<F>& target) {
    SpaceFamily<F> out;
    for (std::size_t v = 0; v < f.maps.size(); ++v) {
        if (f.maps[v].rows() == 0) out.emplace_back(target.dims[v]);
        else out.push_back(Subspace<F>::span(f.maps[v]));
    }
    return out;
}

// Basis of Hom(M, N) from the commuting-square equations.
template <class F>
std::vector<Morphism<F>> hom_space(const Representation<F>& m, const Representation<F>& n) {
    const int nv = m.num_vertices();
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
    const int unknowns = offset[nv];
    if (unknowns == 0) return {};
    const Quiver& q = m.alg->quiver;
    std::vector<std::vector<F>> rows;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrow(a).source, t = q.arrow(a).target;
        const Matrix<F>& ma = m.act[a];
        const Matrix<F>& na = n.act[a];
        // (M_a h_t - h_s N_a)[p][c] = 0
        for (int p = 0; p < m.dims[s]; ++p)
            for (int c = 0; c < n.dims[t]; ++c) {
                std::vector<F> row(unknowns, F(0));
                bool any = false;
                for (int r = 0; r < m.dims[t]; ++r)
                    if (!ma(p, r).is_zero()) {
                        row[offset[t] + r * n.dims[t] + c] += ma(p, r);
                        any = true;
                    }
                for (int r = 0; r < n.dims[s]; ++r)
                    if (!na(r, c).is_zero()) {
                        row[offset[s] + p * n.dims[s] + r] -= na(r, c);
                        any = true;
                    }
                if (any) rows.push_back(std::move(row));
            }
    }
    Matrix<F> sys(rows.size(), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i) sys.set_row(i, rows[i]);
    Matrix<F> ker = rows.empty() ? Matrix<F>::identity(unknowns) : null_space(sys);
    std::vector<Morphism<F>> out;
    for (std::size_t k = 0; k < ker.rows(); ++k) {
        Morphism<F> f;
        for (int v = 0; v < nv; ++v) {
            Matrix<F> h(m.dims[v], n.dims[v]);
            for (int i = 0; i < m.dims[v]; ++i)
                for (int j = 0; j < n.dims[v]; ++j) h(i, j) = ker(k, offset[v] + i * n.dims[v] + j);
            f.maps.push_back(std::move(h));
        }
        out.push_back(std::move(f));
    }
    return out;
}

// The map P_v -> N sending e_v to x in N_v.
template <class F>
Morphism<F> yoneda_map(const ProjectiveModule<F>& p, const Representation<F>& n,
                       const std::vector<Matrix<F>>& n_basis_action, const std::vector<std::vector<F>>& images) {
    Morphism<F> f = zero_morphism(p.rep, n);
    const auto& alg = *p.rep.alg;
    for (int w = 0; w < alg.num_vertices(); ++w)
        for (std::size_t i = 0; i < p.coords[w].size(); ++i) {
            auto [j, b] = p.coords[w][i];
            auto y = row_times(images[j], n_basis_action[b]);
            for (int c = 0; c < n.dims[w]; ++c) f.maps[w](i, c) = y[c];
        }
    return f;
}

template <class F>
std::vector<int> dimension_vector(const Representation<F>& m) {
    return m.dims;
}

} // namespace wsa
