#pragma once

#include "wsa/wsa.hpp"

namespace wsa::testing {

template <class F>
struct Built {
    SurfaceSpec spec;
    TriangulationData<F> td;
    ArrowClassification cls;
    BoundedAlgebra<F> alg;
    std::vector<int> gamma;
};

template <class F>
Built<F> build(const SurfaceSpec& s) {
    Built<F> b{s, instantiate<F>(s), {}, {}, {}};
    b.cls = classify(b.td);
    b.alg = build_weighted_surface_algebra(b.td);
    b.gamma = gamma_vertices(b.alg.quiver, b.cls);
    return b;
}

inline std::vector<SurfaceSpec> all_presets(const Rational& lambda = Rational(2)) {
    return {triangle(lambda), triangular_k(lambda, 2), spherical(lambda), n_spherical(3, 1, 1, lambda),
            mixed(1, 1, lambda)};
}

template <class F>
std::vector<int> walk(const BoundedAlgebra<F>& alg, std::initializer_list<const char*> names) {
    std::vector<int> w;
    for (const char* n : names) w.push_back(alg.quiver.vertex(n));
    return w;
}

} // namespace wsa::testing
