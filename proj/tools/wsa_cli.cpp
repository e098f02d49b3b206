#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsa/wsa.hpp"

namespace {

using namespace wsa;

struct Options {
    std::string source;
    std::optional<std::string> lambda;
    int n = 0, m = 1, m2 = 1, k = 2;
    std::optional<std::string> field;
    std::uint64_t seed = 0x5eed;
    bool json = false;
    int jobs = 1;
    bool dump = false;
    std::string left, right;
    int degree = 1;
};

// Exit code 2 for anything wrong with the input.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SurfaceSpec load_source(const Options& o) {
    SurfaceSpec s;
    const std::string prefix = "preset:";
    if (o.source.rfind(prefix, 0) == 0) {
        PresetOptions p;
        if (o.lambda) p.lambda = Rational::parse(*o.lambda);
        p.n = o.n;
        p.m = o.m;
        p.m2 = o.m2;
        p.k = o.k;
        s = preset(o.source.substr(prefix.size()), p);
    } else {
        s = attach_family_chain(load_spec(o.source));
        if (o.lambda) s.lambda = Rational::parse(*o.lambda);
    }
    if (o.field) {
        if (*o.field == "q") s.prime = 0;
        else if (o.field->rfind("gf:", 0) == 0) {
            std::uint64_t p = 0;
            try {
                p = std::stoull(o.field->substr(3));
            } catch (const std::exception&) {
                throw InputError("bad --field '" + *o.field + "'");
            }
            if (p < 2 || p >= (1ull << 31) || !is_prime(p)) throw InputError("--field needs a prime below 2^31");
            s.prime = static_cast<std::uint32_t>(p);
        } else {
            throw InputError("--field must be 'q' or 'gf:<p>'");
        }
    }
    if (s.prime && s.lambda.denominator() % s.prime == 0) throw InputError("lambda is not defined modulo p");
    return s;
}

std::string dims_string(const Quiver& q, const std::vector<int>& d) {
    std::string out;
    for (int v = 0; v < q.num_vertices(); ++v) out += (v ? " " : "") + q.vertex_name(v) + ":" + std::to_string(d[v]);
    return out;
}

template <class F>
struct Built {
    SurfaceSpec spec;
    TriangulationData<F> td;
    ArrowClassification cls;
    BoundedAlgebra<F> alg;
};

template <class F>
Built<F> build(const SurfaceSpec& s) {
    Built<F> b{s, instantiate<F>(s), {}, {}};
    b.cls = classify(b.td);
    b.alg = build_weighted_surface_algebra(b.td);
    return b;
}

// S(v), P(v), U(v1,...,vk) with k >= 2, Omega^k(expr) with k an integer.
template <class F>
Representation<F> parse_module(const BoundedAlgebra<F>& alg, std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), ::isspace), text.end());
    static const std::regex omega(R"(^Omega\^(-?\d+)\((.*)\)$)");
    static const std::regex call(R"(^([SPU])\(([^()]*)\)$)");
    std::smatch mt;
    if (std::regex_match(text, mt, omega)) {
        int k = std::stoi(mt[1]);
        auto inner = parse_module(alg, mt[2]);
        auto out = syzygy_power(inner, k);
        out.label = text;
        return out;
    }
    if (!std::regex_match(text, mt, call)) throw InputError("malformed module expression '" + text + "'");
    std::vector<int> walk;
    std::stringstream ss(mt[2]);
    for (std::string name; std::getline(ss, name, ',');) {
        if (!alg.quiver.has_vertex(name)) throw InputError("unknown vertex '" + name + "' in '" + text + "'");
        walk.push_back(alg.quiver.vertex(name));
    }
    const std::string kind = mt[1];
    if (kind == "U") {
        if (walk.size() < 2) throw InputError("U(...) needs at least two vertices; use S(v) for a simple");
        return uniserial(alg, walk);
    }
    if (walk.size() != 1) throw InputError(kind + "(...) takes exactly one vertex");
    return kind == "S" ? simple(alg, walk[0]) : projective(alg, walk[0]);
}

int cmd_validate(const Options& o) {
    SurfaceSpec s = load_source(o);
    TriangulationData<Rational> td = instantiate<Rational>(s);
    Validation v = validate(td);
    if (o.json) {
        std::cout << classification_json(s, v).dump(2) << "\n";
        return v.ok() ? 0 : 1;
    }
    const Quiver& q = s.quiver;
    std::cout << "family " << s.family << ", " << q.num_vertices() << " vertices, " << q.num_arrows() << " arrows\n";
    if (!v.ok()) {
        for (const auto& x : v.violations) std::cout << "  " << to_string(x.code) << ": " << x.message << "\n";
        return 1;
    }
    const auto& cls = v.classification;
    std::cout << "g-cycles:\n";
    for (const auto& c : cls.g_cycles) {
        const auto& i = cls[c[0]];
        std::cout << "  (" << q.word_string(c, " ") << ")  n=" << i.n << " m=" << i.m
                  << " c=" << s.param[c[0]].to_string() << (i.is_virtual ? "  virtual" : "") << "\n";
    }
    std::cout << "Gabriel arrows:";
    const Quiver gab = gabriel_quiver(q, cls);
    for (const auto& a : gab.arrows()) std::cout << " " << a.name;
    std::cout << "\nGamma:";
    for (int v2 : gamma_vertices(q, cls)) std::cout << " " << q.vertex_name(v2);
    std::cout << "\nevery f-triangle has a virtual arrow: " << (every_triangle_has_virtual(cls) ? "yes" : "no") << "\n";
    std::cout << "Gabriel quiver bipartite: " << (gabriel_quiver_bipartite(q, cls) ? "yes" : "no") << "\n";
    return 0;
}

template <class F>
int cmd_algebra(const Options& o, const SurfaceSpec& s) {
    auto b = build<F>(s);
    auto sym = check_symmetric(b.alg);
    auto bad = socle_relation_failures(b.alg, b.td, b.cls);
    const bool ok = sym.ok() && bad.empty();
    if (o.json) {
        json j = algebra_json(s, b.alg, sym, o.dump);
        json names = json::array();
        for (int a : bad) names.push_back(b.alg.quiver.arrow(a).name);
        j["socle_relation_failures"] = names;
        std::cout << j.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    const Quiver& q = b.alg.quiver;
    std::cout << "dim " << b.alg.dim() << " (truncation " << b.alg.truncation << ")\n";
    std::cout << "vertex dims: " << dims_string(q, b.alg.vertex_dims()) << "\n";
    std::cout << "Cartan matrix:\n";
    for (const auto& row : b.alg.cartan()) {
        std::cout << " ";
        for (int x : row) std::cout << " " << std::setw(3) << x;
        std::cout << "\n";
    }
    std::cout << "symmetric form: " << (sym.symmetric ? "symmetric" : "NOT symmetric")
              << ", gram rank " << sym.gram_rank << "/" << b.alg.dim()
              << ", socles " << (sym.socles_simple ? "simple" : "NOT simple") << "\n";
    if (!sym.failure.empty()) std::cout << "  " << sym.failure << "\n";
    std::cout << "c B = c' B' at every vertex: " << (bad.empty() ? "yes" : "no") << "\n";
    if (o.dump) {
        std::cout << "basis:\n";
        for (int x = 0; x < b.alg.dim(); ++x) {
            const auto& bp = b.alg.basis[x];
            std::cout << "  " << x << ": "
                      << (bp.word.empty() ? "e_" + q.vertex_name(bp.source) : q.word_string(bp.word, " ")) << "\n";
        }
    }
    return ok ? 0 : 1;
}

template <class F>
int cmd_ext(const Options& o, const SurfaceSpec& s) {
    auto b = build<F>(s);
    if (o.degree < 0 || o.degree > 8) throw InputError("--degree must be in 0..8");
    auto left = parse_module(b.alg, o.left);
    auto right = parse_module(b.alg, o.right);
    const auto method = o.degree == 0 ? ExtMethod::Resolution : ExtMethod::Both;
    const int d = ext_dim(o.degree, left, right, method);
    if (o.json) {
        json j;
        j["schema"] = kExtSchema;
        j["spec"] = spec_header(s);
        j["degree"] = o.degree;
        j["dim"] = d;
        j["left"] = module_json(left);
        j["right"] = module_json(right);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dim Ext^" << o.degree << "(" << o.left << ", " << o.right << ") = " << d << "\n";
    }
    return 0;
}

template <class F>
int cmd_cluster(const Options& o, const SurfaceSpec& s) {
    auto b = build<F>(s);
    const Quiver& q = b.alg.quiver;
    auto gamma = gamma_vertices(q, b.cls);
    auto r = cluster_analysis(b.alg, gamma, {o.jobs, o.seed});
    auto expected = expected_verdict(s);
    const int code = expected && *expected != r.verdict ? 1 : 0;
    if (o.json) {
        std::cout << cluster_json(s, b.alg, r, expected).dump(2) << "\n";
        return code;
    }
    std::cout << "algebra " << s.family << " over " << field_name(s) << ", lambda " << s.lambda.to_string() << ", dim "
              << b.alg.dim() << "\n";
    std::cout << "Gamma:";
    for (int v : gamma) std::cout << " " << q.vertex_name(v);
    std::cout << "\nsummands of M (" << r.summands.size() << ", pairwise non-isomorphic: "
              << (r.summands_distinct ? "yes" : "no") << "):\n";
    for (const auto& x : r.summands)
        std::cout << "  " << std::left << std::setw(18) << x.label << std::right << " dim " << std::setw(3)
                  << x.module.dim() << "  [" << dims_string(q, x.module.dims) << "]\n";
    std::cout << "Ext^1(M,M) = Ext^2(M,M) = 0: " << (r.m_table.all_zero ? "yes" : "no")
              << "; Ext^2(X,Y) = Ext^1(Y,X): " << (r.m_table.symmetric ? "yes" : "no") << "\n";
    std::cout << "candidates (" << r.candidates.size() << "):\n";
    for (const auto& c : r.candidates)
        std::cout << "  " << std::left << std::setw(28) << c.module.label << std::right << " x" << c.multiplicity
                  << "  " << (c.summand >= 0 ? "in add(M) as " + r.summands[c.summand].label : "not in add(M)")
                  << "\n";
    std::cout << "Ext^{1,2}(M, candidates) = 0: " << (r.ext_to_candidates.all_zero ? "yes" : "no") << "\n";
    std::cout << "verdict: " << to_string(r.verdict) << "\n";
    std::cout << "expected: " << (expected ? to_string(*expected) : "none recorded") << "\n";
    if (!r.nonzero_pairs.empty()) {
        std::cout << "nonzero Ext^1 pairs:\n";
        for (const auto& p : r.nonzero_pairs)
            std::cout << "  Ext^1(" << p.left << ", " << p.right << ") = " << p.dim << "\n";
    }
    if (r.witness) {
        const auto& w = *r.witness;
        std::cout << "witness: 0 -> " << w.right << " -> E -> " << w.left << " -> 0\n";
        std::cout << "  dim E by vertex: " << dims_string(q, w.middle_dims) << "\n";
        std::cout << "  non-split: dim Hom(M,E) = " << w.hom_m_e << " < " << w.hom_m_n << " + " << w.end_m << ": "
                  << (w.certified ? "yes" : "no") << "\n";
    }
    std::cout << "Ext evaluations cross-checked by two methods: " << r.ext_evaluations << "\n";
    return code;
}

template <class F>
int cmd_audit(const Options& o, const SurfaceSpec& s) {
    auto b = build<F>(s);
    const Quiver& q = b.alg.quiver;
    auto gamma = gamma_vertices(q, b.cls);
    auto cands = enumerate_star_candidates(b.alg, gamma, o.seed);
    match_summands(cands, build_M(b.alg, gamma), o.seed);
    AuditOptions ao;
    ao.seed = o.seed;
    ao.jobs = o.jobs;
    auto a = audit(b.alg, b.cls, gamma, s.chain, cands, ao);
    if (o.json) {
        std::cout << audit_json(s, a).dump(2) << "\n";
        return a.ok() ? 0 : 1;
    }
    auto yn = [](bool x) { return x ? "pass" : "FAIL"; };
    std::cout << "Omega^4(S) = S for every simple: " << yn(a.period_ok()) << "\n";
    std::cout << "Ext^2(X,Y) = Ext^1(Y,X) on " << a.symmetry.size() << " seeded pairs: " << yn(a.symmetry_ok()) << "\n";
    if (a.corner) {
        std::cout << "corner algebra eAe: " << yn(a.corner->ok()) << " (dim " << a.corner->corner_dim
                  << ", spanned by x/y monomials: " << a.corner->monomial_rank << ")\n";
        for (std::size_t i = 0; i < a.corner->steps.size(); ++i) {
            const auto& st = a.corner->steps[i];
            std::cout << "  i=" << i + 1 << ": y = rho delta - (" << st.t << ") A', x y = 0: " << yn(st.xy_zero)
                      << ", y x = 0: " << yn(st.yx_zero) << ", longest x^" << st.x_length << " ~ y^" << st.y_length
                      << ": " << yn(st.socle_proportional) << "\n";
        }
    } else {
        std::cout << "corner algebra eAe: not applicable\n";
    }
    std::cout << "Hom(S_v, X) = 0 = Hom(X, S_v) off Gamma: " << yn(a.candidate_hom_ok) << "\n";
    std::cout << "Hom(Omega X, S_a) = 0 on Gamma: " << yn(a.omega_hom_ok) << "\n";
    return a.ok() ? 0 : 1;
}

template <class Fn>
int with_field(const SurfaceSpec& s, Fn&& fn) {
    if (s.prime) {
        Zp::Context ctx(s.prime);
        return fn.template operator()<Zp>();
    }
    return fn.template operator()<Rational>();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted surface algebras: modules, Ext and cluster tilting checks"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("source", o.source, "spec file, or preset:<triangle|triangular|spherical|n-spherical|mixed>")
            ->required();
        sub->add_option("--lambda", o.lambda, "lambda, a rational");
        sub->add_option("--n", o.n, "number of blocks (n-spherical, mixed)");
        sub->add_option("--m", o.m, "multiplicity m");
        sub->add_option("--m2", o.m2, "multiplicity m' (n-spherical)");
        sub->add_option("--k", o.k, "multiplicity k (triangular)");
        sub->add_option("--field", o.field, "q or gf:<p>");
        sub->add_option("--seed", o.seed, "seed for randomised isomorphism tests and sampling");
        sub->add_flag("--json", o.json, "JSON output");
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    };
    auto* validate_cmd = app.add_subcommand("validate", "validate triangulation data and print the classification");
    auto* algebra_cmd = app.add_subcommand("algebra", "build the algebra; dims, Cartan matrix, symmetric form");
    auto* ext_cmd = app.add_subcommand("ext", "dimension of Ext^i between module expressions");
    auto* cluster_cmd = app.add_subcommand("cluster-check", "candidate module M and the cluster tilting verdict");
    auto* audit_cmd = app.add_subcommand("audit", "periodicity, Ext symmetry and corner algebra checks");
    auto* export_cmd = app.add_subcommand("export", "print the spec file of a preset or spec");
    for (auto* c : {validate_cmd, algebra_cmd, ext_cmd, cluster_cmd, audit_cmd, export_cmd}) common(c);
    algebra_cmd->add_flag("--dump", o.dump, "include basis and arrow action");
    ext_cmd->add_option("--left", o.left, "S(v), P(v), U(v1,...,vk) or Omega^k(...)")->required();
    ext_cmd->add_option("--right", o.right, "module expression")->required();
    ext_cmd->add_option("--degree", o.degree, "degree i");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(o);
        SurfaceSpec s = load_source(o);
        if (export_cmd->parsed()) {
            std::cout << export_spec(s);
            return 0;
        }
        return with_field(s, [&]<class F>() -> int {
            if (algebra_cmd->parsed()) return cmd_algebra<F>(o, s);
            if (ext_cmd->parsed()) return cmd_ext<F>(o, s);
            if (cluster_cmd->parsed()) return cmd_cluster<F>(o, s);
            return cmd_audit<F>(o, s);
        });
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::MethodMismatch ? 1 : 2;
    }
}
