#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "families.hpp"

namespace wsa {

// Text format, one statement per line, '#' starts a comment:
//
//   [field]    rational | prime <p>
//   [lambda]   <rational>
//   [quiver]   vertex <name>...  |  arrow <name> <source> <target>
//   [f]        <arrow> <arrow> <arrow>            one f-cycle per line
//   [weights]  <arrow> <positive integer>         weight of the g-cycle of <arrow>
//   [params]   <arrow> <expr>                     expr: q | lambda | q*lambda^k | -lambda^k
//   [family]   name <id> | n <int> | m <int> | m2 <int> | k <int>
//
// [quiver] and [f] are required. Cycles without an entry get weight 1 and
// parameter 1.

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

inline int parse_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline std::vector<std::vector<int>> g_cycles_if_defined(const SurfaceSpec& s) {
    TriangulationData<Rational> td;
    td.quiver = s.quiver;
    td.f = s.f();
    td.weight.assign(s.quiver.num_arrows(), 1);
    td.param.assign(s.quiver.num_arrows(), Rational(1));
    for (int x : td.f)
        if (x < 0) return {};
    Validation v = validate(td);
    return v.classification.g_cycles;
}

} // namespace detail

inline SurfaceSpec parse_spec(const std::string& text) {
    static const std::set<std::string> known = {"field", "lambda", "quiver", "f", "weights", "params", "family"};
    SurfaceSpec spec;
    spec.family = "custom";
    std::set<std::string> seen;
    std::string section;
    std::map<int, std::pair<int, int>> weights; // arrow -> (weight, line)
    std::map<int, std::pair<ParamExpr, int>> params;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    auto err = [&](const std::string& msg) { fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + msg); };
    auto arrow = [&](const std::string& name) {
        if (!spec.quiver.has_arrow(name)) err("unknown arrow '" + name + "'");
        return spec.quiver.arrow_id(name);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') err("malformed section header");
            section = detail::trim(line.substr(1, line.size() - 2));
            if (!known.count(section)) err("unknown section [" + section + "]");
            if (!seen.insert(section).second) err("duplicate section [" + section + "]");
            if ((section == "f" || section == "weights" || section == "params") && !seen.count("quiver"))
                err("[" + section + "] must follow [quiver]");
            continue;
        }
        if (section.empty()) err("statement outside a section");
        auto tok = detail::tokens(line);
        if (section == "field") {
            if (tok.size() == 1 && tok[0] == "rational") spec.prime = 0;
            else if (tok.size() == 2 && tok[0] == "prime") {
                int p = detail::parse_int(tok[1], lineno);
                if (p < 2 || !is_prime(static_cast<std::uint32_t>(p))) err("'" + tok[1] + "' is not a prime");
                spec.prime = static_cast<std::uint32_t>(p);
            } else err("expected 'rational' or 'prime <p>'");
        } else if (section == "lambda") {
            if (tok.size() != 1) err("expected one rational value");
            spec.lambda = Rational::parse(tok[0]);
        } else if (section == "quiver") {
            if (tok[0] == "vertex" && tok.size() >= 2) {
                for (std::size_t i = 1; i < tok.size(); ++i) {
                    if (spec.quiver.has_vertex(tok[i])) err("duplicate vertex '" + tok[i] + "'");
                    spec.quiver.add_vertex(tok[i]);
                }
            } else if (tok[0] == "arrow" && tok.size() == 4) {
                if (spec.quiver.has_arrow(tok[1])) err("duplicate arrow '" + tok[1] + "'");
                for (int i : {2, 3})
                    if (!spec.quiver.has_vertex(tok[i])) err("unknown vertex '" + tok[i] + "'");
                spec.quiver.add_arrow(tok[1], tok[2], tok[3]);
            } else err("expected 'vertex <name>...' or 'arrow <name> <source> <target>'");
        } else if (section == "f") {
            std::vector<int> cyc;
            for (const auto& t : tok) cyc.push_back(arrow(t));
            spec.f_cycles.push_back(cyc);
        } else if (section == "weights") {
            if (tok.size() != 2) err("expected '<arrow> <weight>'");
            int a = arrow(tok[0]);
            int w = detail::parse_int(tok[1], lineno);
            if (w < 1) err("weight must be positive");
            weights[a] = {w, lineno};
        } else if (section == "params") {
            if (tok.size() < 2) err("expected '<arrow> <expression>'");
            int a = arrow(tok[0]);
            params[a] = {ParamExpr::parse(line.substr(line.find(tok[0]) + tok[0].size())), lineno};
        } else if (section == "family") {
            if (tok.size() != 2) err("expected '<key> <value>'");
            if (tok[0] == "name") spec.family = tok[1];
            else if (tok[0] == "n") spec.n = detail::parse_int(tok[1], lineno);
            else if (tok[0] == "m") spec.m = detail::parse_int(tok[1], lineno);
            else if (tok[0] == "m2") spec.m2 = detail::parse_int(tok[1], lineno);
            else if (tok[0] == "k") spec.k = detail::parse_int(tok[1], lineno);
            else err("unknown key '" + tok[0] + "' in [family]");
        }
    }
    lineno = 0;
    if (!seen.count("quiver")) err("missing [quiver]");
    if (!seen.count("f")) err("missing [f]");
    const int na = spec.quiver.num_arrows();
    {
        std::vector<int> hit(na, 0);
        for (const auto& c : spec.f_cycles)
            for (int a : c)
                if (hit[a]++) err("arrow '" + spec.quiver.arrow(a).name + "' appears twice in [f]");
    }
    spec.weight.assign(na, 1);
    spec.param.assign(na, ParamExpr::constant(Rational(1)));
    auto cycles = detail::g_cycles_if_defined(spec);
    if (cycles.empty())
        for (int a = 0; a < na; ++a) cycles.push_back({a});
    for (const auto& cyc : cycles) {
        std::optional<std::pair<int, int>> w;
        std::optional<std::pair<ParamExpr, int>> p;
        for (int a : cyc) {
            if (auto it = weights.find(a); it != weights.end()) {
                if (w && w->first != it->second.first)
                    fail(ErrorCode::WeightNotCycleConstant, "conflicting weights on the g-cycle of '" +
                                                                spec.quiver.arrow(a).name + "'");
                w = it->second;
            }
            if (auto it = params.find(a); it != params.end()) {
                if (p && !(p->first == it->second.first))
                    fail(ErrorCode::WeightNotCycleConstant, "conflicting parameters on the g-cycle of '" +
                                                                spec.quiver.arrow(a).name + "'");
                p = it->second;
            }
        }
        for (int a : cyc) {
            if (w) spec.weight[a] = w->first;
            if (p) spec.param[a] = p->first;
        }
    }
    return spec;
}

inline SurfaceSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorCode::ParseError, "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

inline std::string export_spec(const SurfaceSpec& s) {
    std::ostringstream out;
    const Quiver& q = s.quiver;
    out << "[family]\nname " << s.family << "\n";
    if (s.n) out << "n " << s.n << "\n";
    if (s.m) out << "m " << s.m << "\n";
    if (s.m2) out << "m2 " << s.m2 << "\n";
    if (s.k) out << "k " << s.k << "\n";
    out << "\n[field]\n" << (s.prime ? "prime " + std::to_string(s.prime) : std::string("rational")) << "\n";
    out << "\n[lambda]\n" << s.lambda.to_string() << "\n";
    out << "\n[quiver]\nvertex";
    for (const auto& v : q.vertex_names()) out << " " << v;
    out << "\n";
    for (const auto& a : q.arrows())
        out << "arrow " << a.name << " " << q.vertex_name(a.source) << " " << q.vertex_name(a.target) << "\n";
    out << "\n[f]\n";
    for (const auto& c : s.f_cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << q.arrow(c[i]).name;
        out << "\n";
    }
    auto cycles = detail::g_cycles_if_defined(s);
    if (cycles.empty())
        for (int a = 0; a < q.num_arrows(); ++a) cycles.push_back({a});
    out << "\n[weights]\n";
    for (const auto& c : cycles) out << q.arrow(c[0]).name << " " << s.weight[c[0]] << "\n";
    out << "\n[params]\n";
    for (const auto& c : cycles) out << q.arrow(c[0]).name << " " << s.param[c[0]].to_string() << "\n";
    return out.str();
}

struct PresetOptions {
    Rational lambda{2};
    int n = 0, m = 1, m2 = 1, k = 2; // n = 0 picks the family default
};

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"triangle", "triangular", "spherical", "n-spherical", "mixed"};
    return names;
}

inline SurfaceSpec preset(const std::string& name, const PresetOptions& o) {
    if (name == "triangle") return triangle(o.lambda);
    if (name == "triangular") return triangular_k(o.lambda, o.k);
    if (name == "spherical") return spherical(o.lambda);
    if (name == "n-spherical") return n_spherical(o.n ? o.n : 3, o.m, o.m2, o.lambda);
    if (name == "mixed") return mixed(o.n ? o.n : 1, o.m, o.lambda);
    fail(ErrorCode::InvalidArgument, "unknown preset '" + name + "'");
}

// A parsed file naming a preset family gets the preset's block labels back
// when its quiver is the preset quiver.
inline SurfaceSpec attach_family_chain(SurfaceSpec s) {
    if (std::find(preset_names().begin(), preset_names().end(), s.family) == preset_names().end()) return s;
    PresetOptions o;
    o.lambda = s.lambda;
    if (s.n) o.n = s.n;
    if (s.m) o.m = s.m;
    if (s.m2) o.m2 = s.m2;
    if (s.k) o.k = s.k;
    try {
        SurfaceSpec p = preset(s.family, o);
        if (p.quiver == s.quiver) s.chain = p.chain;
    } catch (const Error&) {
    }
    return s;
}

} // namespace wsa
