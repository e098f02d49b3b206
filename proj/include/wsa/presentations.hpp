#pragma once

#include <string>
#include <vector>

#include "algebra.hpp"
#include "families.hpp"

namespace wsa {

// One displayed relation: sum of coeff * path = 0, paths given by arrow names.
struct DisplayedTerm {
    ParamExpr coeff;
    std::vector<std::string> arrows;
};
using DisplayedRelation = std::vector<DisplayedTerm>;

struct GabrielPresentation {
    std::string family;
    SurfaceSpec surface; // the weighted surface data whose Gabriel quiver is used
    std::vector<DisplayedRelation> relations;

    Quiver quiver() const {
        Quiver g;
        for (const auto& v : surface.quiver.vertex_names()) g.add_vertex(v);
        std::vector<char> used(surface.quiver.num_arrows(), 0);
        for (const auto& r : relations)
            for (const auto& t : r)
                for (const auto& a : t.arrows) used[surface.quiver.arrow_id(a)] = 1;
        for (int a = 0; a < surface.quiver.num_arrows(); ++a)
            if (used[a]) g.add_arrow(surface.quiver.arrow(a).name, surface.quiver.arrow(a).source,
                                     surface.quiver.arrow(a).target);
        return g;
    }
};

namespace detail {

inline DisplayedTerm term(std::vector<std::string> arrows, ParamExpr c = ParamExpr::constant(Rational(1))) {
    return {c, std::move(arrows)};
}
inline ParamExpr neg(ParamExpr p) {
    p.coeff = -p.coeff;
    return p;
}
inline DisplayedRelation equal(std::vector<std::string> lhs, std::vector<std::string> rhs,
                               ParamExpr c = ParamExpr::constant(Rational(1))) {
    return {term(std::move(lhs)), term(std::move(rhs), neg(c))};
}
inline DisplayedRelation zero(std::vector<std::string> path) { return {term(std::move(path))}; }

} // namespace detail

inline GabrielPresentation triangle_presentation(const Rational& lambda) {
    using detail::equal;
    using detail::zero;
    const ParamExpr lam = ParamExpr::lambda();
    GabrielPresentation p;
    p.family = "triangle";
    p.surface = triangle(lambda);
    p.relations = {
        equal({"alpha", "beta", "alpha"}, {"alpha", "gamma", "delta"}),
        equal({"delta", "beta", "alpha"}, {"delta", "gamma", "delta"}, lam),
        equal({"beta", "alpha", "beta"}, {"gamma", "delta", "beta"}),
        equal({"beta", "alpha", "gamma"}, {"gamma", "delta", "gamma"}, lam),
        zero({"alpha", "beta", "alpha", "gamma"}),
        zero({"beta", "alpha", "beta", "alpha", "beta"}),
        zero({"delta", "gamma", "delta", "beta"}),
        zero({"gamma", "delta", "gamma", "delta", "gamma"}),
        zero({"alpha", "beta", "alpha", "beta", "alpha"}),
        zero({"delta", "gamma", "delta", "gamma", "delta"}),
        zero({"delta", "beta", "alpha", "beta"}),
    };
    return p;
}

inline GabrielPresentation spherical_presentation(const Rational& lambda) {
    using detail::equal;
    using detail::zero;
    const ParamExpr lam = ParamExpr::lambda();
    GabrielPresentation p;
    p.family = "spherical";
    p.surface = spherical(lambda);
    p.relations = {
        equal({"alpha", "beta", "nu"}, {"rho", "omega", "nu"}),
        equal({"beta", "nu", "delta"}, {"beta", "gamma", "sigma"}, lam),
        equal({"nu", "delta", "alpha"}, {"gamma", "sigma", "alpha"}, lam),
        equal({"delta", "alpha", "beta"}, {"delta", "rho", "omega"}),
        equal({"gamma", "sigma", "rho"}, {"nu", "delta", "rho"}),
        equal({"sigma", "rho", "omega"}, {"sigma", "alpha", "beta"}, lam),
        equal({"rho", "omega", "gamma"}, {"alpha", "beta", "gamma"}, lam),
        equal({"omega", "gamma", "sigma"}, {"omega", "nu", "delta"}),
        zero({"alpha", "beta", "nu", "delta", "alpha"}),
        zero({"beta", "nu", "delta", "rho"}),
        zero({"nu", "delta", "alpha", "beta", "nu"}),
        zero({"delta", "alpha", "beta", "gamma"}),
        zero({"gamma", "sigma", "rho", "omega", "gamma"}),
        zero({"sigma", "rho", "omega", "nu"}),
        zero({"rho", "omega", "gamma", "sigma", "rho"}),
        zero({"omega", "gamma", "sigma", "alpha"}),
        zero({"beta", "gamma", "sigma", "rho"}),
        zero({"sigma", "alpha", "beta", "nu"}),
        zero({"delta", "rho", "omega", "gamma"}),
        zero({"omega", "nu", "delta", "alpha"}),
        zero({"beta", "nu", "delta", "alpha", "beta"}),
        zero({"delta", "alpha", "beta", "nu", "delta"}),
        zero({"sigma", "rho", "omega", "gamma", "sigma"}),
        zero({"omega", "gamma", "sigma", "rho", "omega"}),
    };
    return p;
}

inline GabrielPresentation gabriel_presentation(const std::string& family, const Rational& lambda) {
    if (family == "triangle") return triangle_presentation(lambda);
    if (family == "spherical") return spherical_presentation(lambda);
    fail(ErrorCode::InvalidArgument, "no displayed presentation for family '" + family + "'");
}

// Relations of a presentation as path combinations over `q`.
template <class F>
RelationSet<F> displayed_relations(const GabrielPresentation& p, const Quiver& q, const F& lambda) {
    RelationSet<F> rels;
    for (const auto& r : p.relations) {
        std::vector<PathTerm<F>> terms;
        std::string label;
        for (const auto& t : r) {
            terms.push_back({t.coeff.value(lambda), q.parse_word(t.arrows)});
            if (!label.empty()) label += " ";
            for (const auto& a : t.arrows) label += a;
        }
        rels.push_back(make_combination<F>(q, std::move(terms), label));
    }
    return rels;
}

template <class F>
BoundedAlgebra<F> build_from_gabriel_presentation(const GabrielPresentation& p, const F& lambda) {
    require(!lambda.is_zero() && !(lambda == F(1)), ErrorCode::LambdaForbidden,
            "lambda must avoid 0 and 1, got " + lambda.to_string());
    Quiver q = p.quiver();
    std::vector<char> all(q.num_arrows(), 1);
    return build_algebra_stable(q, all, displayed_relations(p, q, lambda), 2);
}

template <class F>
struct Normalization {
    std::vector<ParamExpr> cycle_params; // one per g-cycle of the surface data
    SurfaceSpec surface;
    BoundedAlgebra<F> algebra;
    int tried = 0;
};

// Which displayed relations fail in a weighted surface algebra.
template <class F>
std::vector<std::string> failing_displayed_relations(const GabrielPresentation& p, const BoundedAlgebra<F>& alg,
                                                     const F& lambda) {
    std::vector<std::string> bad;
    for (const auto& r : displayed_relations(p, alg.quiver, lambda))
        if (!alg.eval(r).empty()) bad.push_back(r.label);
    return bad;
}

// Searches parameters per g-cycle, fewest non-unit choices first, until every
// displayed relation vanishes in the weighted surface algebra.
template <class F>
std::optional<Normalization<F>> find_c_normalization(const GabrielPresentation& p, const F& lambda) {
    const SurfaceSpec& base = p.surface;
    TriangulationData<F> td0 = instantiate<F>(base);
    ArrowClassification cls = classify(td0);
    const std::size_t nc = cls.g_cycles.size();
    const std::vector<ParamExpr> choices = {
        ParamExpr::constant(Rational(1)), ParamExpr::lambda(-1), ParamExpr::lambda(1),
        ParamExpr::constant(Rational(-1)), ParamExpr::lambda(-1, Rational(-1)), ParamExpr::lambda(1, Rational(-1)),
    };
    int tried = 0;
    for (std::size_t nonunit = 0; nonunit <= nc; ++nonunit) {
        std::vector<int> pick(nc, 0);
        // odometer over choice indices, filtered by the number of non-unit entries
        while (true) {
            std::size_t count = 0;
            for (int x : pick) count += x != 0;
            if (count == nonunit) {
                SurfaceSpec s = base;
                std::vector<ParamExpr> cyc(nc);
                for (std::size_t c = 0; c < nc; ++c) {
                    cyc[c] = choices[pick[c]];
                    for (int a : cls.g_cycles[c]) s.param[a] = cyc[c];
                }
                ++tried;
                TriangulationData<F> td = instantiate<F>(s);
                BoundedAlgebra<F> alg = build_weighted_surface_algebra(td);
                if (failing_displayed_relations(p, alg, lambda).empty())
                    return Normalization<F>{cyc, s, std::move(alg), tried};
            }
            std::size_t i = 0;
            while (i < nc && ++pick[i] == static_cast<int>(choices.size())) pick[i++] = 0;
            if (i == nc) break;
        }
    }
    return std::nullopt;
}

} // namespace wsa
