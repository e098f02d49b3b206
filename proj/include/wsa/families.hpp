#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triangulation.hpp"

namespace wsa {

// coeff * lambda^power, kept symbolic until a field is chosen.
struct ParamExpr {
    Rational coeff{1};
    int lambda_power = 0;

    static ParamExpr constant(Rational c) { return {std::move(c), 0}; }
    static ParamExpr lambda(int power = 1, Rational c = Rational(1)) { return {std::move(c), power}; }

    template <class F>
    F value(const F& lam) const {
        F v = field_traits<F>::from_rational(coeff);
        if (lambda_power != 0) {
            require(!lam.is_zero(), ErrorCode::LambdaForbidden, "lambda must be nonzero");
            F base = lambda_power > 0 ? lam : lam.inverse();
            for (int i = 0; i < std::abs(lambda_power); ++i) v *= base;
        }
        return v;
    }

    std::string to_string() const {
        if (lambda_power == 0) return coeff.to_string();
        std::string lam = "lambda";
        if (lambda_power != 1) lam += "^" + std::to_string(lambda_power);
        if (coeff.is_one()) return lam;
        if (coeff == Rational(-1)) return "-" + lam;
        return coeff.to_string() + "*" + lam;
    }

    static ParamExpr parse(std::string_view text) {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        auto pos = s.find("lambda");
        if (pos == std::string::npos) return constant(Rational::parse(s));
        ParamExpr e;
        std::string head = s.substr(0, pos), tail = s.substr(pos + 6);
        if (head.empty()) e.coeff = Rational(1);
        else if (head == "-") e.coeff = Rational(-1);
        else if (head.back() == '*') e.coeff = Rational::parse(head.substr(0, head.size() - 1));
        else fail(ErrorCode::ParseError, "bad parameter '" + std::string(text) + "'");
        e.lambda_power = 1;
        if (!tail.empty()) {
            if (tail[0] != '^' || tail.size() < 2) fail(ErrorCode::ParseError, "bad parameter '" + std::string(text) + "'");
            try {
                std::size_t used = 0;
                e.lambda_power = std::stoi(tail.substr(1), &used);
                if (used != tail.size() - 1) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                fail(ErrorCode::ParseError, "bad exponent in '" + std::string(text) + "'");
            }
        }
        if (e.coeff.is_zero()) e.lambda_power = 0;
        return e;
    }

    friend bool operator==(const ParamExpr&, const ParamExpr&) = default;
};

// Vertex and arrow labels of a chain of n-spherical blocks: a_i, b_i, d_i and
// the arrows gamma_i, sigma_i (x_i = gamma_i sigma_i), rho_i, delta_i (y_i = rho_i delta_i).
struct SphericalChain {
    std::vector<int> a, b, d;
    std::vector<int> gamma, sigma, rho, delta;

    friend bool operator==(const SphericalChain&, const SphericalChain&) = default;
};

// Field-independent description of a weighted triangulation quiver.
struct SurfaceSpec {
    std::string family; // triangle, triangular, spherical, n-spherical, mixed, custom
    Quiver quiver;
    std::vector<std::vector<int>> f_cycles;
    std::vector<int> weight;      // per arrow
    std::vector<ParamExpr> param; // per arrow
    Rational lambda{2};
    std::uint32_t prime = 0; // 0 means the rationals
    std::optional<SphericalChain> chain;
    int n = 0, m = 0, m2 = 0, k = 0; // family parameters, for reporting

    std::vector<int> f() const {
        std::vector<int> perm(quiver.num_arrows(), -1);
        for (const auto& c : f_cycles)
            for (std::size_t i = 0; i < c.size(); ++i) perm[c[i]] = c[(i + 1) % c.size()];
        return perm;
    }

    // Equality of the triangulation data, ignoring labels used only for reporting.
    friend bool same_data(const SurfaceSpec& a, const SurfaceSpec& b) {
        return a.quiver == b.quiver && a.f() == b.f() && a.weight == b.weight && a.param == b.param &&
               a.lambda == b.lambda && a.prime == b.prime;
    }
};

template <class F>
TriangulationData<F> instantiate(const SurfaceSpec& spec) {
    TriangulationData<F> td;
    td.quiver = spec.quiver;
    td.f = spec.f();
    td.weight = spec.weight;
    const F lam = field_traits<F>::from_rational(spec.lambda);
    for (const auto& p : spec.param) td.param.push_back(p.value(lam));
    return td;
}

namespace detail {

struct SpecBuilder {
    SurfaceSpec spec;

    int v(const std::string& name) { return spec.quiver.add_vertex(name); }
    int a(const std::string& name, const std::string& s, const std::string& t) {
        int id = spec.quiver.add_arrow(name, s, t);
        spec.weight.push_back(1);
        spec.param.push_back(ParamExpr::constant(Rational(1)));
        return id;
    }
    void f(const std::vector<std::string>& names) {
        std::vector<int> c;
        for (const auto& n : names) c.push_back(spec.quiver.arrow_id(n));
        spec.f_cycles.push_back(c);
    }
    // Sets weight and parameter on the whole g-cycle through `arrow`.
    void cycle(const std::string& arrow, int weight, ParamExpr param) {
        std::vector<int> perm = spec.f();
        std::vector<int> g(perm.size());
        for (std::size_t x = 0; x < perm.size(); ++x) {
            int fx = perm[x];
            const auto& outs = spec.quiver.out_arrows(spec.quiver.arrow(fx).source);
            g[x] = outs[0] == fx ? outs[1] : outs[0];
        }
        int start = spec.quiver.arrow_id(arrow);
        int x = start;
        do {
            spec.weight[x] = weight;
            spec.param[x] = param;
            x = g[x];
        } while (x != start);
    }
};

inline void require_lambda_admissible(const Rational& lambda, bool forbid_one) {
    require(!lambda.is_zero(), ErrorCode::LambdaForbidden, "lambda must be nonzero");
    if (forbid_one) require(!lambda.is_one(), ErrorCode::LambdaForbidden, "lambda must differ from 1");
}

inline void add_triangle_part(SpecBuilder& b, const std::string& one, const std::string& two,
                              const std::string& twop, const std::string& three) {
    b.a("alpha", one, two);
    b.a("beta", two, one);
    b.a("epsilon", one, one);
    b.a("gamma", twop, three);
    b.a("delta", three, twop);
    b.a("epsilon'", three, three);
    b.f({"alpha", "beta", "epsilon"});
    b.f({"gamma", "epsilon'", "delta"});
}

inline std::string idx(const std::string& base, int i) { return base + std::to_string(i); }

// Blocks i = 1..n between a_i and a_{i+1}; a_{n+1} is `last`.
inline SphericalChain add_blocks(SpecBuilder& b, int n, const std::string& last) {
    SphericalChain ch;
    for (int i = 1; i <= n; ++i) {
        std::string ai = idx("a", i), an = i == n ? last : idx("a", i + 1);
        std::string bi = idx("b", i), di = idx("d", i);
        ch.gamma.push_back(b.a(idx("gamma", i), ai, bi));
        ch.sigma.push_back(b.a(idx("sigma", i), bi, an));
        ch.rho.push_back(b.a(idx("rho", i), an, di));
        ch.delta.push_back(b.a(idx("delta", i), di, ai));
        b.a(idx("xi", i), bi, di);
        b.a(idx("eta", i), di, bi);
        b.f({idx("gamma", i), idx("xi", i), idx("delta", i)});
        b.f({idx("sigma", i), idx("rho", i), idx("eta", i)});
    }
    for (int i = 1; i <= n; ++i) {
        ch.a.push_back(b.spec.quiver.vertex(idx("a", i)));
        ch.b.push_back(b.spec.quiver.vertex(idx("b", i)));
        ch.d.push_back(b.spec.quiver.vertex(idx("d", i)));
    }
    return ch;
}

} // namespace detail

// Triangle quiver 1 <-> 2 <-> 3 with virtual loops; k = 1 gives T(lambda).
inline SurfaceSpec triangular_k(const Rational& lambda, int k) {
    require(k >= 1, ErrorCode::InvalidArgument, "k must be positive");
    detail::require_lambda_admissible(lambda, false);
    detail::SpecBuilder b;
    b.spec.family = "triangular";
    for (auto v : {"1", "2", "3"}) b.v(v);
    detail::add_triangle_part(b, "1", "2", "2", "3");
    b.cycle("alpha", k, ParamExpr::lambda());
    b.cycle("epsilon", 2, ParamExpr::constant(Rational(1)));
    b.cycle("epsilon'", 2, ParamExpr::constant(Rational(1)));
    b.spec.lambda = lambda;
    b.spec.k = k;
    return b.spec;
}

// T(lambda), with the parameters under which the weighted surface relations
// induce the displayed Gabriel presentation.
inline SurfaceSpec triangle(const Rational& lambda) {
    detail::require_lambda_admissible(lambda, true);
    SurfaceSpec s = triangular_k(lambda, 1);
    detail::SpecBuilder b{s};
    b.cycle("alpha", 1, ParamExpr::constant(Rational(1)));
    b.cycle("epsilon", 2, ParamExpr::constant(Rational(1)));
    b.cycle("epsilon'", 2, ParamExpr::lambda(-1));
    b.spec.family = "triangle";
    return b.spec;
}

// n-spherical algebra: n blocks glued in a ring, a_{n+1} = a_1.
inline SurfaceSpec n_spherical(int n, int m, int m2, const Rational& lambda, ParamExpr c = ParamExpr::constant(Rational(1)),
                               ParamExpr c2 = ParamExpr::lambda()) {
    require(n >= 2, ErrorCode::InvalidArgument, "n-spherical needs n >= 2");
    require(m >= 1 && m2 >= 1, ErrorCode::InvalidArgument, "multiplicities must be positive");
    detail::require_lambda_admissible(lambda, false);
    detail::SpecBuilder b;
    b.spec.family = "n-spherical";
    for (int i = 1; i <= n; ++i) {
        b.v(detail::idx("a", i));
        b.v(detail::idx("b", i));
        b.v(detail::idx("d", i));
    }
    SphericalChain ch = detail::add_blocks(b, n, "a1");
    b.cycle("gamma1", m, c);
    b.cycle("rho1", m2, c2);
    for (int i = 1; i <= n; ++i) b.cycle(detail::idx("xi", i), 1, ParamExpr::constant(Rational(1)));
    b.spec.chain = ch;
    b.spec.lambda = lambda;
    b.spec.n = n;
    b.spec.m = m;
    b.spec.m2 = m2;
    return b.spec;
}

// S(lambda) with its own vertex and arrow names; parameters as for the
// displayed presentation.
inline SurfaceSpec spherical(const Rational& lambda) {
    detail::require_lambda_admissible(lambda, true);
    detail::SpecBuilder b;
    b.spec.family = "spherical";
    for (auto v : {"1", "2", "3", "4", "5", "6"}) b.v(v);
    b.a("alpha", "1", "2");
    b.a("beta", "2", "3");
    b.a("gamma", "3", "4");
    b.a("sigma", "4", "1");
    b.a("rho", "1", "6");
    b.a("omega", "6", "3");
    b.a("nu", "3", "5");
    b.a("delta", "5", "1");
    b.a("xi", "2", "5");
    b.a("eta", "5", "2");
    b.a("epsilon", "6", "4");
    b.a("mu", "4", "6");
    b.f({"alpha", "xi", "delta"});
    b.f({"beta", "nu", "eta"});
    b.f({"rho", "epsilon", "sigma"});
    b.f({"gamma", "mu", "omega"});
    b.cycle("alpha", 1, ParamExpr::lambda());
    b.cycle("rho", 1, ParamExpr::constant(Rational(1)));
    b.cycle("xi", 1, ParamExpr::constant(Rational(1)));
    b.cycle("epsilon", 1, ParamExpr::constant(Rational(1)));
    SphericalChain ch;
    const Quiver& q = b.spec.quiver;
    ch.a = {q.vertex("1"), q.vertex("3")};
    ch.b = {q.vertex("2"), q.vertex("4")};
    ch.d = {q.vertex("5"), q.vertex("6")};
    ch.gamma = {q.arrow_id("alpha"), q.arrow_id("gamma")};
    ch.sigma = {q.arrow_id("beta"), q.arrow_id("sigma")};
    ch.rho = {q.arrow_id("nu"), q.arrow_id("rho")};
    ch.delta = {q.arrow_id("delta"), q.arrow_id("omega")};
    b.spec.chain = ch;
    b.spec.lambda = lambda;
    b.spec.n = 2;
    b.spec.m = 1;
    b.spec.m2 = 1;
    return b.spec;
}

// Triangle part, n blocks and the second triangle part glued along 2 = a_1 and 2' = a_{n+1}.
inline SurfaceSpec mixed(int n, int m, const Rational& lambda) {
    require(n >= 1 && m >= 1, ErrorCode::InvalidArgument, "mixed algebra needs n, m >= 1");
    detail::require_lambda_admissible(lambda, false);
    detail::SpecBuilder b;
    b.spec.family = "mixed";
    b.v("1");
    for (int i = 1; i <= n + 1; ++i) b.v(detail::idx("a", i));
    for (int i = 1; i <= n; ++i) {
        b.v(detail::idx("b", i));
        b.v(detail::idx("d", i));
    }
    b.v("3");
    const std::string last = detail::idx("a", n + 1);
    detail::add_triangle_part(b, "1", "a1", last, "3");
    SphericalChain ch = detail::add_blocks(b, n, last);
    b.cycle("alpha", m, ParamExpr::lambda());
    for (int i = 1; i <= n; ++i) b.cycle(detail::idx("xi", i), 1, ParamExpr::constant(Rational(1)));
    b.cycle("epsilon", 2, ParamExpr::constant(Rational(1)));
    b.cycle("epsilon'", 2, ParamExpr::constant(Rational(1)));
    ch.a.push_back(b.spec.quiver.vertex(last));
    b.spec.chain = ch;
    b.spec.lambda = lambda;
    b.spec.n = n;
    b.spec.m = m;
    return b.spec;
}

} // namespace wsa
