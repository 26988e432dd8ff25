#pragma once

#include <string>
#include <vector>

#include "affine.hpp"

namespace adlv {

enum class Degeneracy { Identity, DegenLow, DegenHigh, NonDegenerate };

inline const char* degeneracy_name(Degeneracy d)
{
    switch (d) {
        case Degeneracy::Identity: return "Identity";
        case Degeneracy::DegenLow: return "DegenLow";
        case Degeneracy::DegenHigh: return "DegenHigh";
        case Degeneracy::NonDegenerate: return "NonDegenerate";
    }
    return "?";
}

/// The representative b, as a dominant translation.
struct ConjugacyRep {
    Kind kind = Kind::A2;
    Vec lambda{};
    Degeneracy degeneracy = Degeneracy::Identity;

    bool is_identity() const { return degeneracy == Degeneracy::Identity; }
};

inline ConjugacyRep identity_rep(Kind kind)
{
    ConjugacyRep b;
    b.kind = kind;
    return b;
}

/// Builds the representative from exponents.
///
/// A1 accepts `s` or `s,-s`; A2 takes `a,b,c` with a + b + c = 0 and
/// a >= b >= c; C2 takes `a,b` with a >= b >= 0; G2 takes coordinates in the
/// (epsilon, delta) basis and requires dominance.  For rank 2, DegenLow means
/// the pairing with the second simple root vanishes and DegenHigh the first.
inline ConjugacyRep make_rep(Kind kind, const std::vector<std::int64_t>& e)
{
    const RootSystem& rs = root_system(kind);
    ConjugacyRep b;
    b.kind = kind;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument(std::string("unsupported b for ") + kind_name(kind) + ": " + why);
    };
    if (kind == Kind::A1) {
        if (e.size() == 2 && e[0] + e[1] != 0) fail("expected s,-s");
        if (e.empty() || e.size() > 2) fail("expected s or s,-s");
        if (e[0] < 0) fail("s must be >= 0");
        b.lambda = Vec{e[0], 0, 0};
    } else if (kind == Kind::A2) {
        if (e.size() == 2) {
            b.lambda = Vec{e[0], e[1], -e[0] - e[1]};
        } else if (e.size() == 3) {
            if (e[0] + e[1] + e[2] != 0) fail("exponents must sum to 0");
            b.lambda = Vec{e[0], e[1], e[2]};
        } else {
            fail("expected a,b,c");
        }
    } else {
        if (e.size() != 2) fail("expected two exponents");
        b.lambda = Vec{e[0], e[1], 0};
    }
    for (int s : rs.simple)
        if (dot(b.lambda, rs.roots[s]) < 0) fail("not dominant");
    if (is_zero(b.lambda)) {
        b.degeneracy = Degeneracy::Identity;
    } else if (rs.rank == 1) {
        b.degeneracy = Degeneracy::NonDegenerate;
    } else if (dot(b.lambda, rs.roots[rs.simple[1]]) == 0) {
        b.degeneracy = Degeneracy::DegenLow;
    } else if (dot(b.lambda, rs.roots[rs.simple[0]]) == 0) {
        b.degeneracy = Degeneracy::DegenHigh;
    } else {
        b.degeneracy = Degeneracy::NonDegenerate;
    }
    return b;
}

inline std::vector<std::int64_t> rep_exponents(const ConjugacyRep& b)
{
    const RootSystem& rs = root_system(b.kind);
    if (b.kind == Kind::A1) return {b.lambda[0], -b.lambda[0]};
    return std::vector<std::int64_t>(b.lambda.begin(), b.lambda.begin() + rs.dim);
}

/// The alcoves w^{-1} t_lambda w C_M for w in W.
inline std::vector<Alcove> w_conjugates(const RootSystem& rs, const ConjugacyRep& b)
{
    std::vector<Alcove> out;
    for (std::size_t u = 0; u < rs.weyl_size(); ++u) {
        AffineElement x = finite_element(static_cast<int>(u));
        out.push_back(compose(rs, compose(rs, invert(rs, x), translation_element(b.lambda)), x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace adlv
