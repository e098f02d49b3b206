#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "matrix.hpp"
#include "relations.hpp"

namespace wsa {

struct BasisPath {
    Word word;
    int source = 0;
    int target = 0;
};

// Finite-dimensional quotient KQ/I with a basis of paths and the right
// action of every arrow on that basis.
template <class F>
class BoundedAlgebra {
public:
    Quiver quiver;
    std::vector<char> gabriel; // arrows that survive in the Gabriel quiver
    RelationSet<F> relations;
    int truncation = 0;
    std::vector<BasisPath> basis;
    std::vector<std::vector<SparseVec<F>>> arrow_action; // [basis element][arrow]

    int dim() const noexcept { return static_cast<int>(basis.size()); }
    int num_vertices() const noexcept { return quiver.num_vertices(); }

    // Basis elements starting at v (the projective e_v Λ), in basis order.
    const std::vector<int>& starting_at(int v) const { return from_.at(v); }
    const std::vector<int>& block(int v, int w) const { return blocks_.at(v * num_vertices() + w); }
    int idempotent(int v) const { return idempotent_.at(v); }

    std::optional<int> basis_index(const Word& w, int source) const {
        auto it = index_.find({source, w});
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    SparseVec<F> unit(int b) const { return {{b, F(1)}}; }

    SparseVec<F> act(const SparseVec<F>& x, int arrow) const {
        SparseVec<F> out;
        for (const auto& [b, c] : x) {
            const auto& img = arrow_action[b][arrow];
            if (!img.empty()) out = sparse_axpy(out, c, img);
        }
        return out;
    }

    SparseVec<F> act(SparseVec<F> x, const Word& w) const {
        for (int a : w) {
            if (x.empty()) break;
            x = act(x, a);
        }
        return x;
    }

    // The class of a path starting at `source` (trivial when w is empty).
    SparseVec<F> path(int source, const Word& w) const { return act(unit(idempotent(source)), w); }

    SparseVec<F> eval(const PathCombination<F>& r) const {
        SparseVec<F> out;
        for (const auto& t : r.terms) out = sparse_axpy(out, t.coeff, path(quiver.arrow(t.path.front()).source, t.path));
        return out;
    }

    SparseVec<F> multiply(const SparseVec<F>& x, const SparseVec<F>& y) const {
        SparseVec<F> out;
        for (const auto& [b, c] : y) out = sparse_axpy(out, c, act(x, basis[b].word));
        return out;
    }

    int vertex_dim(int v) const { return static_cast<int>(from_.at(v).size()); }

    std::vector<int> vertex_dims() const {
        std::vector<int> d(num_vertices());
        for (int v = 0; v < num_vertices(); ++v) d[v] = vertex_dim(v);
        return d;
    }

    // C[i][j] = dim e_i Λ e_j.
    std::vector<std::vector<int>> cartan() const {
        std::vector<std::vector<int>> c(num_vertices(), std::vector<int>(num_vertices()));
        for (int i = 0; i < num_vertices(); ++i)
            for (int j = 0; j < num_vertices(); ++j) c[i][j] = static_cast<int>(block(i, j).size());
        return c;
    }

    int length(int b) const { return static_cast<int>(basis[b].word.size()); }

    std::string element_string(const SparseVec<F>& x) const {
        if (x.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) s += " + ";
            std::string c = x[i].second.to_string();
            if (c != "1") s += "(" + c + ")*";
            const auto& bp = basis[x[i].first];
            s += bp.word.empty() ? "e_" + quiver.vertex_name(bp.source) : quiver.word_string(bp.word, "");
        }
        return s;
    }

    // Fills the lookup tables once basis and arrow_action are set.
    void index() {
        const int n = num_vertices();
        from_.assign(n, {});
        blocks_.assign(n * n, {});
        idempotent_.assign(n, -1);
        index_.clear();
        for (int b = 0; b < dim(); ++b) {
            const auto& bp = basis[b];
            from_[bp.source].push_back(b);
            blocks_[bp.source * n + bp.target].push_back(b);
            if (bp.word.empty()) idempotent_[bp.source] = b;
            index_[{bp.source, bp.word}] = b;
        }
    }

private:
    std::vector<std::vector<int>> from_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> idempotent_;
    std::map<std::pair<int, Word>, int> index_;
};

namespace detail {

struct PathTable {
    std::vector<BasisPath> paths;
    std::vector<int> length;
    std::vector<int> virtual_count;
    std::vector<int> ext; // [path * arrows + arrow], -1 when absent
    int arrows = 0;

    int extend(int p, int a) const { return ext[static_cast<std::size_t>(p) * arrows + a]; }
};

// Paths of length < L, skipping every path that contains a word of `zero`.
inline PathTable enumerate_paths(const Quiver& q, const std::vector<char>& gabriel, int L,
                                 const std::vector<Word>& zero = {}) {
    PathTable t;
    t.arrows = q.num_arrows();
    for (int v = 0; v < q.num_vertices(); ++v) {
        t.paths.push_back({{}, v, v});
        t.length.push_back(0);
        t.virtual_count.push_back(0);
    }
    t.ext.assign(t.paths.size() * t.arrows, -1);
    std::size_t frontier_begin = 0, frontier_end = t.paths.size();
    for (int len = 1; len < L; ++len) {
        for (std::size_t p = frontier_begin; p < frontier_end; ++p) {
            for (int a : q.out_arrows(t.paths[p].target)) {
                BasisPath np{t.paths[p].word, t.paths[p].source, q.arrow(a).target};
                np.word.push_back(a);
                const auto& w = np.word;
                if (std::any_of(zero.begin(), zero.end(), [&](const Word& z) {
                        return z.size() <= w.size() && std::equal(z.rbegin(), z.rend(), w.rbegin());
                    }))
                    continue;
                int id = static_cast<int>(t.paths.size());
                t.paths.push_back(std::move(np));
                t.length.push_back(len);
                t.virtual_count.push_back(t.virtual_count[p] + (gabriel[a] ? 0 : 1));
                t.ext.resize(t.paths.size() * t.arrows, -1);
                t.ext[p * t.arrows + a] = id;
            }
        }
        frontier_begin = frontier_end;
        frontier_end = t.paths.size();
    }
    return t;
}

} // namespace detail

// Builds KQ/(I + J^L). The basis consists of the paths that are not leading
// terms; leading terms prefer paths through non-Gabriel arrows, then longer paths.
template <class F>
BoundedAlgebra<F> build_truncated(const Quiver& q, const std::vector<char>& gabriel, const RelationSet<F>& rels,
                                  int L) {
    require(L >= 2, ErrorCode::InvalidArgument, "truncation length must be at least 2");
    for (const auto& r : rels) {
        for (const auto& t : r.terms) {
            require(!t.path.empty() && q.is_path(t.path), ErrorCode::InvalidArgument, "bad relation term");
            if (q.arrow(t.path.front()).source != r.source || q.arrow(t.path.back()).target != r.target)
                fail(ErrorCode::InhomogeneousRelation, "relation '" + r.label + "' mixes endpoints");
        }
    }
    const int nv = q.num_vertices();
    std::vector<Word> monomials;
    for (const auto& r : rels)
        if (r.terms.size() == 1 && !r.terms[0].coeff.is_zero()) monomials.push_back(r.terms[0].path);
    detail::PathTable pt = detail::enumerate_paths(q, gabriel, L, monomials);
    const int np = static_cast<int>(pt.paths.size());

    // Column order inside each (source, target) block.
    std::vector<std::vector<int>> block_paths(nv * nv);
    for (int p = 0; p < np; ++p) block_paths[pt.paths[p].source * nv + pt.paths[p].target].push_back(p);
    std::vector<int> column(np);
    for (auto& bp : block_paths) {
        std::sort(bp.begin(), bp.end(), [&](int x, int y) {
            if (pt.virtual_count[x] != pt.virtual_count[y]) return pt.virtual_count[x] > pt.virtual_count[y];
            if (pt.length[x] != pt.length[y]) return pt.length[x] > pt.length[y];
            return pt.paths[x].word < pt.paths[y].word;
        });
        for (std::size_t i = 0; i < bp.size(); ++i) column[bp[i]] = static_cast<int>(i);
    }
    std::vector<SparseEchelon<F>> ech;
    ech.reserve(nv * nv);
    for (auto& bp : block_paths) ech.emplace_back(bp.size());

    using Terms = std::vector<std::pair<int, F>>; // (path id, coeff)
    auto insert = [&](const Terms& terms) {
        const auto& first = pt.paths[terms.front().first];
        SparseVec<F> v;
        v.reserve(terms.size());
        for (const auto& [p, c] : terms) v.emplace_back(column[p], c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        ech[first.source * nv + first.target].insert(std::move(v));
    };

    std::vector<Terms> stack;
    for (const auto& r : rels) {
        for (int p = 0; p < np; ++p) {
            if (pt.paths[p].target != r.source) continue;
            Terms start;
            for (const auto& t : r.terms) {
                int id = p;
                for (int a : t.path) {
                    id = pt.extend(id, a);
                    if (id < 0) break;
                }
                if (id >= 0 && !t.coeff.is_zero()) start.emplace_back(id, t.coeff);
            }
            if (start.empty()) continue;
            stack.push_back(std::move(start));
            while (!stack.empty()) {
                Terms cur = std::move(stack.back());
                stack.pop_back();
                insert(cur);
                const int tgt = pt.paths[cur.front().first].target;
                for (int a : q.out_arrows(tgt)) {
                    Terms next;
                    for (const auto& [id, c] : cur) {
                        int e = pt.extend(id, a);
                        if (e >= 0) next.emplace_back(e, c);
                    }
                    if (!next.empty()) stack.push_back(std::move(next));
                }
            }
        }
    }
    for (auto& e : ech) e.finalize();

    // Basis: non-leading paths, ordered by (source, length, target, word).
    std::vector<int> basis_paths;
    for (int p = 0; p < np; ++p) {
        const auto& bp = pt.paths[p];
        if (!ech[bp.source * nv + bp.target].is_pivot(column[p])) basis_paths.push_back(p);
    }
    std::sort(basis_paths.begin(), basis_paths.end(), [&](int x, int y) {
        const auto& a = pt.paths[x];
        const auto& b = pt.paths[y];
        return std::tie(a.source, pt.length[x], a.target, a.word) < std::tie(b.source, pt.length[y], b.target, b.word);
    });
    std::vector<int> basis_of_path(np, -1);
    for (std::size_t i = 0; i < basis_paths.size(); ++i) basis_of_path[basis_paths[i]] = static_cast<int>(i);

    auto normal_form = [&](int p) -> SparseVec<F> {
        if (basis_of_path[p] >= 0) return {{basis_of_path[p], F(1)}};
        const auto& bp = pt.paths[p];
        const int blk = bp.source * nv + bp.target;
        const auto& row = ech[blk].pivot_row(column[p]);
        SparseVec<F> out;
        for (std::size_t k = 1; k < row.size(); ++k)
            out.emplace_back(basis_of_path[block_paths[blk][row[k].first]], -row[k].second);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    };

    BoundedAlgebra<F> alg;
    alg.quiver = q;
    alg.gabriel = gabriel;
    alg.relations = rels;
    alg.truncation = L;
    for (int p : basis_paths) alg.basis.push_back(pt.paths[p]);
    alg.arrow_action.assign(alg.basis.size(), std::vector<SparseVec<F>>(q.num_arrows()));
    for (std::size_t b = 0; b < basis_paths.size(); ++b) {
        for (int a : q.out_arrows(alg.basis[b].target)) {
            int e = pt.extend(basis_paths[b], a);
            if (e >= 0) alg.arrow_action[b][a] = normal_form(e);
        }
    }
    alg.index();
    return alg;
}

// Build at L, rejecting L when one more length changes the dimension.
template <class F>
BoundedAlgebra<F> build_algebra(const Quiver& q, const std::vector<char>& gabriel, const RelationSet<F>& rels, int L) {
    BoundedAlgebra<F> a = build_truncated(q, gabriel, rels, L);
    BoundedAlgebra<F> b = build_truncated(q, gabriel, rels, L + 1);
    if (a.dim() != b.dim())
        fail(ErrorCode::TruncationTooSmall, "dimension " + std::to_string(a.dim()) + " at L=" + std::to_string(L) +
                                                " but " + std::to_string(b.dim()) + " at L=" + std::to_string(L + 1));
    return a;
}

// Increase L from L0 until the dimension is stable.
template <class F>
BoundedAlgebra<F> build_algebra_stable(const Quiver& q, const std::vector<char>& gabriel, const RelationSet<F>& rels,
                                       int L0, int max_L = 64) {
    BoundedAlgebra<F> a = build_truncated(q, gabriel, rels, L0);
    for (int L = L0; L < max_L; ++L) {
        BoundedAlgebra<F> b = build_truncated(q, gabriel, rels, L + 1);
        if (a.dim() == b.dim()) return a;
        a = std::move(b);
    }
    fail(ErrorCode::TruncationTooSmall, "dimension did not stabilise below L=" + std::to_string(max_L));
}

template <class F>
BoundedAlgebra<F> build_weighted_surface_algebra(const TriangulationData<F>& td) {
    ArrowClassification cls = classify(td);
    return build_algebra_stable(td.quiver, gabriel_arrows(cls), wsa_relations(td, cls), 1 + cls.max_mn());
}

// Arrows α for which c_α B_α - c_ᾱ B_ᾱ is nonzero in the algebra.
template <class F>
std::vector<int> socle_relation_failures(const BoundedAlgebra<F>& alg, const TriangulationData<F>& td,
                                         const ArrowClassification& cls) {
    std::vector<int> bad;
    for (int a = 0; a < td.quiver.num_arrows(); ++a) {
        const int b = cls[a].bar;
        const int v = td.quiver.arrow(a).source;
        auto x = sparse_axpy(alg.path(v, paths_B_A(cls, a).B), -(td.param[b] / td.param[a]),
                             alg.path(v, paths_B_A(cls, b).B));
        if (!x.empty() || alg.path(v, paths_B_A(cls, a).B).empty()) bad.push_back(a);
    }
    return bad;
}

// Left null space of the stacked arrow actions on e_v Λ: the socle of P_v.
template <class F>
std::vector<SparseVec<F>> projective_socle(const BoundedAlgebra<F>& alg, int v) {
    const auto& rows = alg.starting_at(v);
    std::vector<int> where(alg.dim(), -1);
    for (std::size_t i = 0; i < rows.size(); ++i) where[rows[i]] = static_cast<int>(i);
    const int na = alg.quiver.num_arrows();
    Matrix<F> m(rows.size(), rows.size() * na);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int a = 0; a < na; ++a)
            for (const auto& [b, c] : alg.arrow_action[rows[i]][a]) m(i, a * rows.size() + where[b]) = c;
    Matrix<F> k = left_null_space(m);
    std::vector<SparseVec<F>> out;
    for (std::size_t r = 0; r < k.rows(); ++r) {
        SparseVec<F> x;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!k(r, i).is_zero()) x.emplace_back(rows[i], k(r, i));
        out.push_back(std::move(x));
    }
    return out;
}

template <class F>
struct SymmetricCheck {
    bool symmetric = false;
    bool nondegenerate = false;
    bool socles_simple = false;
    std::vector<F> form; // value of the linear form on each basis element
    int gram_rank = 0;
    std::string failure;

    bool ok() const noexcept { return symmetric && nondegenerate && socles_simple; }
};

template <class F>
F apply_form(const std::vector<F>& form, const SparseVec<F>& x) {
    F s(0);
    for (const auto& [b, c] : x) s += c * form[b];
    return s;
}

// Looks for a symmetric nondegenerate linear form supported on the socles.
// The form is first tried with the given socle generators scaled to 1; if
// that is not symmetric, the scalars are solved for.
template <class F>
SymmetricCheck<F> check_symmetric(const BoundedAlgebra<F>& alg, std::vector<SparseVec<F>> socle_gens = {}) {
    SymmetricCheck<F> res;
    const int n = alg.num_vertices(), d = alg.dim();
    if (socle_gens.empty()) {
        res.socles_simple = true;
        for (int v = 0; v < n; ++v) {
            auto s = projective_socle(alg, v);
            if (s.size() != 1) {
                res.socles_simple = false;
                res.failure = "socle of P_" + alg.quiver.vertex_name(v) + " has dimension " + std::to_string(s.size());
                return res;
            }
            socle_gens.push_back(s[0]);
        }
    } else {
        res.socles_simple = true;
        for (int v = 0; v < n; ++v) {
            auto s = projective_socle(alg, v);
            bool annihilated = !socle_gens[v].empty();
            for (int a = 0; a < alg.quiver.num_arrows() && annihilated; ++a)
                annihilated = alg.act(socle_gens[v], a).empty();
            if (s.size() != 1 || !annihilated) {
                res.socles_simple = false;
                res.failure = "socle of P_" + alg.quiver.vertex_name(v) + " is not spanned by the given element";
                return res;
            }
        }
    }
    // Each socle element z_v is supported on e_v Λ e_v; the form reads off the
    // coefficient of its last (leading) basis element.
    std::vector<int> lead(n);
    for (int v = 0; v < n; ++v) lead[v] = socle_gens[v].back().first;

    // Products of basis elements, and the functional that picks the socle coordinate.
    std::vector<std::vector<SparseVec<F>>> prod(d, std::vector<SparseVec<F>>(d));
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            if (alg.basis[x].target == alg.basis[y].source)
                prod[x][y] = alg.act(alg.unit(x), alg.basis[y].word);

    auto build_form = [&](const std::vector<F>& w) {
        std::vector<F> form(d, F(0));
        for (int v = 0; v < n; ++v) {
            // coordinate of z_v's lead, normalised so that form(z_v) = w_v
            F lead_coeff = socle_gens[v].back().second;
            form[lead[v]] = w[v] / lead_coeff;
        }
        return form;
    };
    auto symmetric_under = [&](const std::vector<F>& form) -> std::optional<std::pair<int, int>> {
        for (int x = 0; x < d; ++x)
            for (int y = x + 1; y < d; ++y)
                if (!(apply_form(form, prod[x][y]) == apply_form(form, prod[y][x]))) return std::make_pair(x, y);
        return std::nullopt;
    };

    std::vector<F> w(n, F(1));
    std::vector<F> form = build_form(w);
    if (symmetric_under(form)) {
        // Solve for weights: sum_v w_v (coef of lead_v in xy - yx)/z_v[lead] = 0.
        Matrix<F> eqs(0, n);
        for (int x = 0; x < d; ++x)
            for (int y = x + 1; y < d; ++y) {
                std::vector<F> row(n, F(0));
                bool any = false;
                auto diff = sparse_axpy(prod[x][y], F(-1), prod[y][x]);
                for (int v = 0; v < n; ++v)
                    for (const auto& [b, c] : diff)
                        if (b == lead[v]) {
                            row[v] = c / socle_gens[v].back().second;
                            any = true;
                        }
                if (any) eqs.append_row(row);
            }
        Matrix<F> ker = eqs.rows() ? null_space(eqs) : Matrix<F>::identity(n);
        bool found = false;
        for (std::size_t r = 0; r < ker.rows() && !found; ++r) {
            std::vector<F> cand = ker.row(r);
            bool all_nonzero = std::all_of(cand.begin(), cand.end(), [](const F& c) { return !c.is_zero(); });
            if (all_nonzero) {
                w = cand;
                found = true;
            }
        }
        if (!found && ker.rows() > 0) {
            // a generic combination of the kernel basis
            std::vector<F> cand(n, F(0));
            for (std::size_t r = 0; r < ker.rows(); ++r)
                for (int v = 0; v < n; ++v) cand[v] += F(static_cast<int>(r * 7 + 3)) * ker(r, v);
            if (std::all_of(cand.begin(), cand.end(), [](const F& c) { return !c.is_zero(); })) {
                w = cand;
                found = true;
            }
        }
        if (!found) {
            auto bad = symmetric_under(form);
            res.failure = "no symmetric socle form; first asymmetric pair (" +
                          alg.element_string(alg.unit(bad->first)) + ", " +
                          alg.element_string(alg.unit(bad->second)) + ")";
            res.form = form;
            return res;
        }
        form = build_form(w);
        if (auto bad = symmetric_under(form)) {
            res.failure = "asymmetric pair (" + alg.element_string(alg.unit(bad->first)) + ", " +
                          alg.element_string(alg.unit(bad->second)) + ")";
            res.form = form;
            return res;
        }
    }
    res.symmetric = true;
    res.form = form;
    Matrix<F> gram(d, d);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) gram(x, y) = apply_form(form, prod[x][y]);
    res.gram_rank = static_cast<int>(rank(gram));
    res.nondegenerate = res.gram_rank == d;
    if (!res.nondegenerate) res.failure = "Gram matrix has rank " + std::to_string(res.gram_rank);
    return res;
}

// Associativity of the basis on all composable triples.
template <class F>
std::optional<std::tuple<int, int, int>> associativity_failure(const BoundedAlgebra<F>& alg) {
    const int d = alg.dim();
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            if (alg.basis[x].target != alg.basis[y].source) continue;
            SparseVec<F> xy = alg.act(alg.unit(x), alg.basis[y].word);
            for (int z = 0; z < d; ++z) {
                if (alg.basis[y].target != alg.basis[z].source) continue;
                SparseVec<F> left = alg.act(xy, alg.basis[z].word);
                SparseVec<F> right = alg.multiply(alg.unit(x), alg.act(alg.unit(y), alg.basis[z].word));
                if (left != right) return std::make_tuple(x, y, z);
            }
        }
    return std::nullopt;
}

// eΛe for the idempotent e = sum of e_v over `vertices`: the basis elements
// of Λ that start and end in the subset, with the inherited product.
template <class F>
struct IdempotentSubalgebra {
    const BoundedAlgebra<F>* parent = nullptr;
    std::vector<int> vertices;
    std::vector<int> basis; // indices into parent->basis

    int dim() const noexcept { return static_cast<int>(basis.size()); }

    bool contains(const SparseVec<F>& x) const {
        for (const auto& [b, c] : x)
            if (!std::binary_search(basis.begin(), basis.end(), b)) return false;
        return true;
    }

    SparseVec<F> multiply(const SparseVec<F>& x, const SparseVec<F>& y) const { return parent->multiply(x, y); }
};

template <class F>
IdempotentSubalgebra<F> idempotent_subalgebra(const BoundedAlgebra<F>& alg, std::vector<int> vertices) {
    require(!vertices.empty(), ErrorCode::InvalidArgument, "idempotent subalgebra needs a vertex");
    std::sort(vertices.begin(), vertices.end());
    IdempotentSubalgebra<F> e;
    e.parent = &alg;
    e.vertices = vertices;
    for (int b = 0; b < alg.dim(); ++b) {
        const auto& bp = alg.basis[b];
        if (std::binary_search(vertices.begin(), vertices.end(), bp.source) &&
            std::binary_search(vertices.begin(), vertices.end(), bp.target))
            e.basis.push_back(b);
    }
    return e;
}

} // namespace wsa
