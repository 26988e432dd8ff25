#include "adlv/io.hpp"

#include <cstdio>
#include <json.hpp>

namespace adlv {

using json = nlohmann::json;


Kind parse_kind(const std::string& s)
{
    for (Kind k : {Kind::A1, Kind::A2, Kind::C2, Kind::G2})
        if (s == kind_name(k)) return k;
    throw std::invalid_argument("unknown root system: " + s);
}

int weyl_index_by_name(const RootSystem& rs, const std::string& name)
{
    for (std::size_t i = 0; i < rs.weyl_names.size(); ++i)
        if (rs.weyl_names[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown Weyl element: " + name);
}

/// Human-readable "t[..] name".
std::string alcove_label(const RootSystem& rs, const Alcove& a)
{
    return "t[" + vec_string(rs, a.translation) + "] " + rs.weyl_names[a.finite];
}

namespace {

json alcove_json(const RootSystem& rs, const Alcove& a)
{
    return json{{"translation", std::vector<std::int64_t>(a.translation.begin(), a.translation.begin() + rs.dim)},
                {"finite", rs.weyl_names[a.finite]}};
}

Alcove alcove_from_json(const RootSystem& rs, const json& j)
{
    Alcove a;
    auto t = j.at("translation").get<std::vector<std::int64_t>>();
    if (static_cast<int>(t.size()) != rs.dim) throw std::invalid_argument("translation has the wrong dimension");
    for (int i = 0; i < rs.dim; ++i) a.translation[i] = t[i];
    a.finite = weyl_index_by_name(rs, j.at("finite").get<std::string>());
    return a;
}

json provenance_json(const RootSystem& rs, const Provenance& p)
{
    json j{{"rule", p.rule}, {"detail", p.detail}};
    if (p.parent) j["parent"] = alcove_json(rs, *p.parent);
    return j;
}

Provenance provenance_from_json(const RootSystem& rs, const json& j)
{
    Provenance p;
    p.rule = j.at("rule").get<std::string>();
    p.detail = j.at("detail").get<std::string>();
    if (j.contains("parent")) p.parent = alcove_from_json(rs, j.at("parent"));
    return p;
}

json header_json(Kind group, const ConjugacyRep& b, const std::string& kind, const WindowInfo& w,
                        const std::set<std::string>& flags)
{
    return json{{"group", kind_name(group)},
                {"b", rep_exponents(b)},
                {"kind", kind},
                {"window", {{"radius", w.radius}, {"truncated", w.truncated}}},
                {"budgets",
                 {{"pmax", w.p_max}, {"qmax", w.q_max}, {"depbudget", w.dep_budget}, {"stability", w.stability_window}}},
                {"flags", std::vector<std::string>(flags.begin(), flags.end())}};
}

void read_header(const json& h, Kind& group, ConjugacyRep& b, WindowInfo& w, std::set<std::string>& flags)
{
    group = parse_kind(h.at("group").get<std::string>());
    b = make_rep(group, h.at("b").get<std::vector<std::int64_t>>());
    w.radius = h.at("window").at("radius").get<std::int64_t>();
    w.truncated = h.at("window").at("truncated").get<bool>();
    const json& bj = h.at("budgets");
    w.p_max = bj.at("pmax").get<int>();
    w.q_max = bj.at("qmax").get<int>();
    w.dep_budget = bj.at("depbudget").get<int>();
    w.stability_window = bj.at("stability").get<int>();
    auto f = h.at("flags").get<std::vector<std::string>>();
    flags = std::set<std::string>(f.begin(), f.end());
}

}  // namespace

static json to_json(const ChamberSet& s)
{
    const RootSystem& rs = root_system(s.group);
    json body = json::array();
    for (const Alcove& a : s.chambers) {
        json e = alcove_json(rs, a);
        auto it = s.provenance.find(a);
        if (it != s.provenance.end()) e["provenance"] = provenance_json(rs, it->second);
        body.push_back(std::move(e));
    }
    return json{{"header", header_json(s.group, s.b, set_kind_name(s.kind), s.window, s.flags)},
                {"chambers", std::move(body)}};
}

static json to_json(const VerdictMap& m)
{
    const RootSystem& rs = root_system(m.group);
    json body = json::array();
    for (const auto& [a, e] : m.entries) {
        json j = alcove_json(rs, a);
        j["verdict"] = verdict_name(e.verdict, m.truncated());
        if (e.provenance) j["provenance"] = provenance_json(rs, *e.provenance);
        body.push_back(std::move(j));
    }
    return json{{"header", header_json(m.group, m.b, "verdicts", m.window, m.flags)},
                {"chambers", std::move(body)}};
}

static json to_json(const ExtendedVerdict& x)
{
    json j = to_json(x.base);
    j["header"]["variant"] = x.variant;
    j["header"]["det_component"] = x.det_component;
    j["header"]["det_modulus"] = x.modulus;
    return j;
}

/// Canonical text form: two-space indentation, sorted keys, trailing newline.
static std::string serialize(const json& j) { return j.dump(2) + "\n"; }
std::string serialize(const ChamberSet& s) { return serialize(to_json(s)); }
std::string serialize(const VerdictMap& m) { return serialize(to_json(m)); }
std::string serialize(const ExtendedVerdict& x) { return serialize(to_json(x)); }

static ChamberSet chamber_set_from_json(const json& j)
{
    ChamberSet s;
    const json& h = j.at("header");
    read_header(h, s.group, s.b, s.window, s.flags);
    const std::string kind = h.at("kind").get<std::string>();
    if (kind == "superset") s.kind = SetKind::Superset;
    else if (kind == "subset") s.kind = SetKind::Subset;
    else if (kind == "exact") s.kind = SetKind::Exact;
    else throw std::invalid_argument("not a chamber set document: " + kind);
    const RootSystem& rs = root_system(s.group);
    for (const json& e : j.at("chambers")) {
        Alcove a = alcove_from_json(rs, e);
        s.chambers.push_back(a);
        if (e.contains("provenance")) s.provenance.emplace(a, provenance_from_json(rs, e.at("provenance")));
    }
    std::sort(s.chambers.begin(), s.chambers.end());
    return s;
}

static VerdictMap verdict_map_from_json(const json& j)
{
    VerdictMap m;
    const json& h = j.at("header");
    if (h.at("kind").get<std::string>() != "verdicts") throw std::invalid_argument("not a verdict document");
    read_header(h, m.group, m.b, m.window, m.flags);
    const RootSystem& rs = root_system(m.group);
    for (const json& e : j.at("chambers")) {
        VerdictEntry v;
        v.verdict = parse_verdict(e.at("verdict").get<std::string>());
        if (e.contains("provenance")) v.provenance = provenance_from_json(rs, e.at("provenance"));
        m.entries.emplace(alcove_from_json(rs, e), std::move(v));
    }
    return m;
}

ChamberSet deserialize_chamber_set(const std::string& text) { return chamber_set_from_json(json::parse(text)); }
VerdictMap deserialize_verdict_map(const std::string& text) { return verdict_map_from_json(json::parse(text)); }

/// Verdict map view of a plain chamber set: members NONEMPTY, the rest of the window EMPTY.
VerdictMap as_verdicts(const ChamberSet& s)
{
    VerdictMap m;
    m.group = s.group;
    m.b = s.b;
    m.window = s.window;
    m.flags = s.flags;
    for (const Alcove& a : alcoves_within(root_system(s.group), static_cast<std::size_t>(s.window.radius))) {
        VerdictEntry e;
        e.verdict = s.contains(a) ? Verdict::Nonempty : Verdict::Empty;
        m.entries.emplace(a, e);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Rendering


static const char* verdict_fill(const std::string& cls)
{
    if (cls == "conjugate") return "#404040";
    if (cls == "nonempty") return "#909090";
    if (cls == "unknown") return "#e0b040";
    return "#ffffff";
}

std::string render_svg(const VerdictMap& m, const RenderSpec& spec)
{
    const RootSystem& rs = root_system(m.group);
    if (rs.rank > 2) throw std::invalid_argument("render supports rank <= 2");
    if (spec.radius < 0 || spec.size < 16) throw std::invalid_argument("bad render window");
    auto conj = w_conjugates(rs, m.b);
    std::set<Alcove> conj_set(conj.begin(), conj.end());
    struct Poly {
        std::vector<std::array<double, 2>> pts;
        std::string cls;
    };
    std::vector<Poly> polys;
    double extent = 1e-9;
    const double sc = static_cast<double>(rs.scale);
    auto picture = [&](const Vec& v) {
        std::array<double, 2> p{0, 0};
        for (int r = 0; r < 2; ++r)
            for (int i = 0; i < 3; ++i) p[r] += rs.picture[r][i] * static_cast<double>(v[i]) / sc;
        return p;
    };
    for (const Alcove& a : alcoves_within(rs, static_cast<std::size_t>(spec.radius))) {
        Poly poly;
        if (rs.rank == 1) {
            auto p = picture(act(rs, a, rs.vertices[0]));
            auto q = picture(act(rs, a, rs.vertices[1]));
            poly.pts = {{p[0], -0.1}, {q[0], -0.1}, {q[0], 0.1}, {p[0], 0.1}};
        } else {
            for (const Vec& v : rs.vertices) poly.pts.push_back(picture(act(rs, a, v)));
        }
        auto it = m.entries.find(a);
        Verdict v = it == m.entries.end() ? Verdict::Empty : it->second.verdict;
        if (v == Verdict::Nonempty) poly.cls = spec.mark_conjugates && conj_set.count(a) ? "conjugate" : "nonempty";
        else if (v == Verdict::Unknown) poly.cls = "unknown";
        else poly.cls = "empty";
        for (const auto& p : poly.pts) extent = std::max({extent, std::abs(p[0]), std::abs(p[1])});
        polys.push_back(std::move(poly));
    }
    const double half = spec.size / 2.0;
    const double k = (half - 8.0) / extent;
    char buf[64];
    auto fmt = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.2f", x);
        return std::string(buf);
    };
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(spec.size) +
           "\" height=\"" + std::to_string(spec.size) + "\">\n";
    out += "<title>" + std::string(kind_name(m.group)) + " b=" + vec_string(rs, m.b.lambda) + "</title>\n";
    out += "<g stroke=\"#000000\" stroke-width=\"0.5\">\n";
    for (const auto& poly : polys) {
        out += "<polygon class=\"" + poly.cls + "\" fill=\"" + verdict_fill(poly.cls) + "\" points=\"";
        for (std::size_t i = 0; i < poly.pts.size(); ++i) {
            if (i) out += " ";
            out += fmt(half + k * poly.pts[i][0]) + "," + fmt(half - k * poly.pts[i][1]);
        }
        out += "\"/>\n";
    }
    out += "</g>\n";
    out += "<g stroke=\"#3060c0\" stroke-width=\"1\">\n";
    out += "<line class=\"axis\" x1=\"0\" y1=\"" + fmt(half) + "\" x2=\"" + std::to_string(spec.size) + "\" y2=\"" +
           fmt(half) + "\"/>\n";
    if (rs.rank == 2)
        out += "<line class=\"axis\" x1=\"" + fmt(half) + "\" y1=\"0\" x2=\"" + fmt(half) + "\" y2=\"" +
               std::to_string(spec.size) + "\"/>\n";
    out += "</g>\n</svg>\n";
    return out;
}

std::string render_svg(const ChamberSet& s, const RenderSpec& spec) { return render_svg(as_verdicts(s), spec); }

static char verdict_char(Verdict v) { return v == Verdict::Nonempty ? '#' : v == Verdict::Unknown ? '?' : '.'; }

/// Text view: a strip for rank one, then one line per chamber of the window.
std::string render_ascii(const VerdictMap& m)
{
    const RootSystem& rs = root_system(m.group);
    std::string out = std::string(kind_name(m.group)) + " b=" + vec_string(rs, m.b.lambda) +
                      " radius=" + std::to_string(m.window.radius) + "\n";
    if (rs.rank == 1) {
        std::map<std::int64_t, Verdict> by_index;
        for (const auto& [a, e] : m.entries) by_index[a1_index(a)] = e.verdict;
        std::string strip;
        for (const auto& [i, v] : by_index) strip += verdict_char(v);
        if (!by_index.empty())
            out += std::to_string(by_index.begin()->first) + " " + strip + " " + std::to_string(by_index.rbegin()->first) + "\n";
    }
    for (const auto& [a, e] : m.entries)
        out += verdict_char(e.verdict) + std::string(" ") + alcove_label(rs, a) + " " +
               verdict_name(e.verdict, m.truncated()) + "\n";
    return out;
}

std::string render_ascii(const ChamberSet& s) { return render_ascii(as_verdicts(s)); }

}  // namespace adlv
