#pragma once

#include <vector>

#include "affine.hpp"

namespace adlv {

enum class SymmetryKind { Identity, Rot120_A2, Rot240_A2, FlipMid_A1, FlipVert_C2 };

inline const char* symmetry_name(SymmetryKind k)
{
    switch (k) {
        case SymmetryKind::Identity: return "Identity";
        case SymmetryKind::Rot120_A2: return "Rot120_A2";
        case SymmetryKind::Rot240_A2: return "Rot240_A2";
        case SymmetryKind::FlipMid_A1: return "FlipMid_A1";
        case SymmetryKind::FlipVert_C2: return "FlipVert_C2";
    }
    return "?";
}

/// Affine isometry x -> linear * x + offset on scaled points, mapping C_M onto itself.
struct SymmetryOp {
    SymmetryKind kind = SymmetryKind::Identity;
    Mat linear = identity_mat();
    Vec offset{};
};

inline Kind symmetry_kind_group(SymmetryKind k)
{
    switch (k) {
        case SymmetryKind::Rot120_A2:
        case SymmetryKind::Rot240_A2: return Kind::A2;
        case SymmetryKind::FlipMid_A1: return Kind::A1;
        case SymmetryKind::FlipVert_C2: return Kind::C2;
        default: break;
    }
    throw std::invalid_argument("identity has no group");
}

inline SymmetryOp make_symmetry(const RootSystem& rs, SymmetryKind k)
{
    SymmetryOp op;
    op.kind = k;
    if (k == SymmetryKind::Identity) return op;
    if (symmetry_kind_group(k) != rs.kind)
        throw std::invalid_argument(std::string(symmetry_name(k)) + " is not defined for " + kind_name(rs.kind));
    switch (k) {
        case SymmetryKind::Rot120_A2:
            // (x1, x2, x3) -> (x3, x1, x2), then shift the origin to the type-1 vertex.
            op.linear = Mat{Vec{0, 0, 1}, Vec{1, 0, 0}, Vec{0, 1, 0}};
            op.offset = rs.vertices[1];
            break;
        case SymmetryKind::Rot240_A2:
            op.linear = Mat{Vec{0, 1, 0}, Vec{0, 0, 1}, Vec{1, 0, 0}};
            op.offset = rs.vertices[2];
            break;
        case SymmetryKind::FlipMid_A1:
            op.linear = Mat{Vec{-1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}};
            op.offset = rs.vertices[1];
            break;
        case SymmetryKind::FlipVert_C2:
            op.linear = Mat{Vec{0, -1, 0}, Vec{-1, 0, 0}, Vec{0, 0, 1}};
            op.offset = rs.vertices[2];
            break;
        default: break;
    }
    return op;
}

/// The non-identity symmetries used for closing chamber sets.
inline std::vector<SymmetryOp> symmetry_ops(const RootSystem& rs)
{
    switch (rs.kind) {
        case Kind::A1: return {make_symmetry(rs, SymmetryKind::FlipMid_A1)};
        case Kind::A2:
            return {make_symmetry(rs, SymmetryKind::Rot120_A2), make_symmetry(rs, SymmetryKind::Rot240_A2)};
        case Kind::C2: return {make_symmetry(rs, SymmetryKind::FlipVert_C2)};
        case Kind::G2: return {};
    }
    return {};
}

inline Vec symmetry_point(const SymmetryOp& op, const Vec& p) { return add(mat_vec(op.linear, p), op.offset); }

inline Alcove symmetry_apply(const RootSystem& rs, const SymmetryOp& op, const Alcove& d)
{
    if (op.kind == SymmetryKind::Identity) return d;
    if (symmetry_kind_group(op.kind) != rs.kind)
        throw std::invalid_argument(std::string(symmetry_name(op.kind)) + " is not defined for " + kind_name(rs.kind));
    return locate(rs, symmetry_point(op, barycenter(rs, d)));
}

/// Smallest superset of `in` closed under the group's symmetries.
template <class Set>
Set symmetry_closure(const RootSystem& rs, const Set& in)
{
    Set out = in;
    auto ops = symmetry_ops(rs);
    std::vector<Alcove> todo(in.begin(), in.end());
    while (!todo.empty()) {
        Alcove a = todo.back();
        todo.pop_back();
        for (const auto& op : ops) {
            Alcove b = symmetry_apply(rs, op, a);
            if (out.insert(b).second) todo.push_back(b);
        }
    }
    return out;
}

}  // namespace adlv
