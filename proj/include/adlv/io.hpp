#pragma once

#include <string>

#include "solver.hpp"

namespace adlv {

Kind parse_kind(const std::string& s);
int weyl_index_by_name(const RootSystem& rs, const std::string& name);

/// Human-readable "t[..] name".
std::string alcove_label(const RootSystem& rs, const Alcove& a);

/// Canonical JSON text: header {group, b, kind, window, budgets, flags} and
/// the chambers sorted, each with translation, finite name and, where
/// known, verdict and provenance.  Two-space indentation, sorted keys.
std::string serialize(const ChamberSet& s);
std::string serialize(const VerdictMap& m);
std::string serialize(const ExtendedVerdict& x);
ChamberSet deserialize_chamber_set(const std::string& text);
VerdictMap deserialize_verdict_map(const std::string& text);

/// Verdict map view of a plain chamber set: members NONEMPTY, the rest of the window EMPTY.
VerdictMap as_verdicts(const ChamberSet& s);

struct RenderSpec {
    std::int64_t radius = 6;
    int size = 640;               ///< image width and height in pixels
    bool mark_conjugates = true;  ///< darker shading on the chambers w^-1 b w C_M
};

/// One polygon per alcove of the spec window, class attribute from the verdict.
std::string render_svg(const VerdictMap& m, const RenderSpec& spec);
std::string render_svg(const ChamberSet& s, const RenderSpec& spec);

/// Text view: a strip for rank one, then one line per chamber of the window.
std::string render_ascii(const VerdictMap& m);
std::string render_ascii(const ChamberSet& s);

}  // namespace adlv
