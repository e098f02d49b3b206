#pragma once

#include <string>
#include <utility>
#include <vector>

#include "triangulation.hpp"

namespace wsa {

template <class F>
struct PathTerm {
    F coeff;
    Word path;
};

// Linear combination of parallel nontrivial paths.
template <class F>
struct PathCombination {
    int source = -1;
    int target = -1;
    std::vector<PathTerm<F>> terms;
    std::string label;

    std::string to_string(const Quiver& q) const {
        std::string s;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            std::string c = terms[i].coeff.to_string();
            if (i) s += " + ";
            if (c != "1") s += "(" + c + ")*";
            s += q.word_string(terms[i].path, "");
        }
        return s.empty() ? "0" : s;
    }
};

template <class F>
using RelationSet = std::vector<PathCombination<F>>;

template <class F>
PathCombination<F> make_combination(const Quiver& q, std::vector<PathTerm<F>> terms, std::string label = {}) {
    PathCombination<F> r;
    r.label = std::move(label);
    for (const auto& t : terms) {
        require(!t.path.empty(), ErrorCode::InvalidArgument, "relation terms must be nontrivial paths");
        require(q.is_path(t.path), ErrorCode::InvalidArgument, "relation term is not a path");
        int s = q.arrow(t.path.front()).source, e = q.arrow(t.path.back()).target;
        if (r.source < 0) {
            r.source = s;
            r.target = e;
        } else if (r.source != s || r.target != e) {
            fail(ErrorCode::InhomogeneousRelation, "terms of '" + r.label + "' are not parallel");
        }
    }
    r.terms = std::move(terms);
    return r;
}

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Generators of the weighted surface ideal, exemption clauses included.
template <class F>
RelationSet<F> wsa_relations(const TriangulationData<F>& td, const ArrowClassification& cls) {
    const Quiver& q = td.quiver;
    RelationSet<F> rels;
    const int na = q.num_arrows();
    for (int a = 0; a < na; ++a) {
        const auto& ia = cls[a];
        const int bar = ia.bar;
        CyclePaths pb = paths_B_A(cls, bar);
        rels.push_back(make_combination<F>(
            q, {{F(1), Word{a, ia.f}}, {-td.param[bar], pb.A}}, "(1) " + q.arrow(a).name));
    }
    for (int a = 0; a < na; ++a) {
        const auto& ia = cls[a];
        const int fa = ia.f, ffa = cls[fa].f, bar = ia.bar;
        const auto& ib = cls[bar];
        bool exempt = cls[ffa].is_virtual || (cls[ib.f].is_virtual && ib.m == 1 && ib.n == 3);
        if (!exempt)
            rels.push_back(make_combination<F>(q, {{F(1), Word{a, fa, cls[fa].g}}}, "(2) " + q.arrow(a).name));
    }
    for (int a = 0; a < na; ++a) {
        const auto& ia = cls[a];
        const int ga = ia.g, fa = ia.f, ffa = cls[fa].f;
        bool exempt = cls[fa].is_virtual || (cls[ffa].is_virtual && cls[fa].m == 1 && cls[fa].n == 3);
        if (!exempt)
            rels.push_back(make_combination<F>(q, {{F(1), Word{a, ga, cls[ga].f}}}, "(3) " + q.arrow(a).name));
    }
    return rels;
}

} // namespace wsa
