#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "quiver.hpp"

namespace wsa {

// Quiver with the permutation f, and weight m and parameter c per arrow.
// Weights and parameters must be constant along g-cycles.
template <class F>
struct TriangulationData {
    Quiver quiver;
    std::vector<int> f;
    std::vector<int> weight;
    std::vector<F> param;
};

struct ArrowInfo {
    int bar = -1;
    int f = -1;
    int g = -1;
    int n = 0;  // length of the g-cycle
    int m = 0;
    int mn = 0;
    bool is_virtual = false;
    int g_cycle = -1;
    int f_cycle = -1;
};

struct ArrowClassification {
    std::vector<ArrowInfo> arrows;
    std::vector<std::vector<int>> g_cycles;
    std::vector<std::vector<int>> f_cycles;

    const ArrowInfo& operator[](int a) const { return arrows.at(a); }
    int max_mn() const {
        int best = 0;
        for (const auto& i : arrows) best = std::max(best, i.mn);
        return best;
    }
};

struct Violation {
    ErrorCode code;
    std::string message;
};

struct Validation {
    std::vector<Violation> violations;
    ArrowClassification classification;
    bool ok() const noexcept { return violations.empty(); }
};

inline std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& perm) {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        for (int x = static_cast<int>(s); !seen[x]; x = perm[x]) {
            seen[x] = 1;
            c.push_back(x);
        }
        cycles.push_back(std::move(c));
    }
    return cycles;
}

template <class F>
Validation validate(const TriangulationData<F>& td) {
    Validation out;
    const Quiver& q = td.quiver;
    const int na = q.num_arrows();
    auto violate = [&](ErrorCode code, std::string msg) { out.violations.push_back({code, std::move(msg)}); };

    if (q.num_vertices() < 3)
        violate(ErrorCode::TooFewVertices, "quiver has " + std::to_string(q.num_vertices()) + " vertices, need at least 3");
    bool regular = true;
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (q.out_arrows(v).size() != 2 || q.in_arrows(v).size() != 2) {
            regular = false;
            violate(ErrorCode::Not2Regular, "vertex " + q.vertex_name(v) + " has out-degree " +
                                                std::to_string(q.out_arrows(v).size()) + " and in-degree " +
                                                std::to_string(q.in_arrows(v).size()));
        }
    }
    if (static_cast<int>(td.f.size()) != na || static_cast<int>(td.weight.size()) != na ||
        static_cast<int>(td.param.size()) != na) {
        violate(ErrorCode::DimensionMismatch, "f, weights and params need one entry per arrow");
        return out;
    }
    bool perm_ok = true;
    {
        std::vector<int> hit(na, 0);
        for (int a = 0; a < na; ++a) {
            if (td.f[a] < 0 || td.f[a] >= na || hit[td.f[a]]++) perm_ok = false;
        }
        if (!perm_ok) violate(ErrorCode::FNotTriangulation, "f is not a permutation of the arrows");
    }
    if (perm_ok) {
        for (int a = 0; a < na; ++a) {
            if (q.arrow(a).target != q.arrow(td.f[a]).source)
                violate(ErrorCode::FNotTriangulation, "t(" + q.arrow(a).name + ") != s(f(" + q.arrow(a).name + "))");
            if (td.f[td.f[td.f[a]]] != a)
                violate(ErrorCode::FNotTriangulation, "f^3 does not fix " + q.arrow(a).name);
        }
    }
    if (!regular || !perm_ok) return out;

    ArrowClassification& cls = out.classification;
    cls.arrows.resize(na);
    for (int a = 0; a < na; ++a) {
        const auto& outs = q.out_arrows(q.arrow(a).source);
        cls.arrows[a].bar = outs[0] == a ? outs[1] : outs[0];
        cls.arrows[a].f = td.f[a];
    }
    std::vector<int> g(na);
    for (int a = 0; a < na; ++a) {
        g[a] = cls.arrows[td.f[a]].bar;
        cls.arrows[a].g = g[a];
    }
    cls.g_cycles = permutation_cycles(g);
    cls.f_cycles = permutation_cycles(td.f);
    for (std::size_t i = 0; i < cls.f_cycles.size(); ++i)
        for (int a : cls.f_cycles[i]) cls.arrows[a].f_cycle = static_cast<int>(i);
    for (std::size_t i = 0; i < cls.g_cycles.size(); ++i) {
        const auto& cyc = cls.g_cycles[i];
        const int m0 = td.weight[cyc[0]];
        const F& c0 = td.param[cyc[0]];
        for (int a : cyc) {
            cls.arrows[a].g_cycle = static_cast<int>(i);
            cls.arrows[a].n = static_cast<int>(cyc.size());
            cls.arrows[a].m = td.weight[a];
            cls.arrows[a].mn = td.weight[a] * static_cast<int>(cyc.size());
            if (td.weight[a] != m0)
                violate(ErrorCode::WeightNotCycleConstant, "weight differs along the g-cycle of " + q.arrow(a).name);
            if (!(td.param[a] == c0))
                violate(ErrorCode::WeightNotCycleConstant,
                        "parameter differs along the g-cycle of " + q.arrow(a).name);
        }
    }
    for (int a = 0; a < na; ++a) {
        auto& info = cls.arrows[a];
        info.is_virtual = info.mn == 2;
        if (td.weight[a] < 1)
            violate(ErrorCode::AdmissibilityViolated, "weight of " + q.arrow(a).name + " is not positive");
        if (td.param[a].is_zero())
            violate(ErrorCode::AdmissibilityViolated, "parameter of " + q.arrow(a).name + " is zero");
    }
    for (int a = 0; a < na; ++a) {
        const auto& info = cls.arrows[a];
        const auto& bar = cls.arrows[info.bar];
        const std::string name = q.arrow(a).name;
        if (info.mn < 2) violate(ErrorCode::AdmissibilityViolated, "m*n < 2 at " + name);
        if (bar.is_virtual) {
            const bool loop = q.arrow(info.bar).source == q.arrow(info.bar).target;
            const int need = loop ? 4 : 3;
            if (info.mn < need)
                violate(ErrorCode::AdmissibilityViolated,
                        "m*n = " + std::to_string(info.mn) + " at " + name + " but its partner is a virtual " +
                            (loop ? "loop" : "arrow") + " (need " + std::to_string(need) + ")");
        }
    }
    return out;
}

// Classification, throwing the first violation.
template <class F>
ArrowClassification classify(const TriangulationData<F>& td) {
    Validation v = validate(td);
    if (!v.ok()) fail(v.violations.front().code, v.violations.front().message);
    return std::move(v.classification);
}

// Arrow subset kept in the Gabriel quiver.
inline std::vector<char> gabriel_arrows(const ArrowClassification& cls) {
    std::vector<char> keep(cls.arrows.size());
    for (std::size_t a = 0; a < cls.arrows.size(); ++a) keep[a] = !cls.arrows[a].is_virtual;
    return keep;
}

inline Quiver gabriel_quiver(const Quiver& q, const ArrowClassification& cls) {
    Quiver g;
    for (const auto& v : q.vertex_names()) g.add_vertex(v);
    for (int a = 0; a < q.num_arrows(); ++a)
        if (!cls[a].is_virtual) g.add_arrow(q.arrow(a).name, q.arrow(a).source, q.arrow(a).target);
    return g;
}

// Vertices that are neither source nor target of a virtual arrow.
inline std::vector<int> gamma_vertices(const Quiver& q, const ArrowClassification& cls) {
    std::vector<char> touched(q.num_vertices(), 0);
    for (int a = 0; a < q.num_arrows(); ++a) {
        if (!cls[a].is_virtual) continue;
        touched[q.arrow(a).source] = 1;
        touched[q.arrow(a).target] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (!touched[v]) out.push_back(v);
    return out;
}

inline bool every_triangle_has_virtual(const ArrowClassification& cls) {
    for (const auto& cyc : cls.f_cycles) {
        bool any = false;
        for (int a : cyc) any = any || cls[a].is_virtual;
        if (!any) return false;
    }
    return true;
}

// Two-colourability of the Gabriel quiver's underlying graph.
inline bool gabriel_quiver_bipartite(const Quiver& q, const ArrowClassification& cls) {
    std::vector<int> colour(q.num_vertices(), -1);
    for (int s = 0; s < q.num_vertices(); ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int a = 0; a < q.num_arrows(); ++a) {
                if (cls[a].is_virtual) continue;
                int u = -1;
                if (q.arrow(a).source == v) u = q.arrow(a).target;
                else if (q.arrow(a).target == v) u = q.arrow(a).source;
                if (u < 0) continue;
                if (colour[u] < 0) {
                    colour[u] = 1 - colour[v];
                    stack.push_back(u);
                } else if (colour[u] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

struct CyclePaths {
    Word B;       // length m*n along the g-cycle
    Word A;       // first m*n - 1 arrows of B
    Word A_prime; // A without its first arrow
};

inline CyclePaths paths_B_A(const ArrowClassification& cls, int alpha) {
    CyclePaths p;
    const int len = cls[alpha].mn;
    int a = alpha;
    for (int i = 0; i < len; ++i) {
        p.B.push_back(a);
        a = cls[a].g;
    }
    p.A.assign(p.B.begin(), p.B.end() - 1);
    p.A_prime.assign(p.A.begin() + 1, p.A.end());
    return p;
}

} // namespace wsa
