#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "adlv/adlv.hpp"

using namespace adlv;

namespace {

struct Options {
    std::string group = "sl3";
    std::string b;
    std::int64_t radius = 8;
    int p_max = 9;
    int q_max = 40;
    int dep_budget = 16;
    std::string method = "classes";
    std::string format = "json";
    std::string out;
    unsigned threads = 1;
    bool seed_only = false;
    bool strict = false;
    std::string variant = "diagonal";
    std::string labels;
    std::string start;
    std::vector<std::string> files;
};

struct GroupInfo {
    Kind kind;
    std::string family;  ///< sl2, gl2, pgl2, ...
};

GroupInfo group_info(const std::string& g)
{
    if (g == "sl2" || g == "gl2" || g == "pgl2") return {Kind::A1, g};
    if (g == "sl3" || g == "gl3" || g == "pgl3") return {Kind::A2, g};
    if (g == "sp4" || g == "gsp4" || g == "psp4") return {Kind::C2, g};
    if (g == "g2") return {Kind::G2, g};
    throw CLI::ValidationError("--group", "unknown group " + g);
}

std::vector<std::int64_t> parse_ints(const std::string& text)
{
    std::vector<std::int64_t> v;
    std::string item;
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    while (in >> item) v.push_back(std::stoll(item));
    return v;
}

ConjugacyRep rep_for(const Options& o, Kind kind)
{
    if (o.b.empty()) return identity_rep(kind);
    return make_rep(kind, parse_ints(o.b));
}

Budgets budgets(const Options& o)
{
    Budgets bud;
    bud.radius = o.radius;
    bud.p_max = o.p_max;
    bud.q_max = o.q_max;
    bud.dep_budget = o.dep_budget;
    bud.threads = o.threads;
    return bud;
}

SupersetMethod method(const Options& o)
{
    if (o.method == "classes") return SupersetMethod::Classes;
    if (o.method == "complete") return SupersetMethod::Complete;
    return SupersetMethod::HalfInfinite;
}

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
}

std::string format_set(const Options& o, const ChamberSet& s)
{
    if (o.format == "svg") return render_svg(s, RenderSpec{s.window.radius});
    if (o.format == "ascii") return render_ascii(s);
    return serialize(s);
}

std::string format_map(const Options& o, const VerdictMap& m)
{
    if (o.format == "svg") return render_svg(m, RenderSpec{m.window.radius});
    if (o.format == "ascii") return render_ascii(m);
    return serialize(m);
}

/// Returns the process exit code.
int run_solve(const Options& o)
{
    GroupInfo g = group_info(o.group);
    const Budgets bud = budgets(o);
    if (g.family == "gl2" || g.family == "pgl2") {
        auto e = o.b.empty() ? std::vector<std::int64_t>{0, 0} : parse_ints(o.b);
        const bool proj = g.family == "pgl2";
        ExtendedVerdict x;
        if (o.variant == "antidiagonal") {
            x = gl2_variants(Gl2Antidiagonal{e.at(0)}, o.radius, proj);
        } else {
            if (e.size() != 2) throw std::invalid_argument("gl2 takes --b alpha,beta");
            const std::int64_t gap = std::abs(e[0] - e[1]);
            x = gl2_variants(Gl2Diagonal{e[0], e[1]}, o.radius, proj);
            if (gap % 2 == 0) {
                // Scalar times an SL2 representative: run the engine instead of the closed form.
                x.base = solve(Kind::A1, make_rep(Kind::A1, {gap / 2}), bud, method(o), o.seed_only);
                x.base.flags.insert("diagonal");
            }
        }
        emit(o, o.format == "json" ? serialize(x) : format_map(o, x.base));
        return 0;
    }
    VerdictMap m = solve(g.kind, rep_for(o, g.kind), bud, method(o), o.seed_only);
    const std::map<std::string, ExtendedGroup> ext{{"gl3", ExtendedGroup::GL3},
                                                   {"pgl3", ExtendedGroup::PGL3},
                                                   {"gsp4", ExtendedGroup::GSp4},
                                                   {"psp4", ExtendedGroup::PSp4}};
    auto it = ext.find(g.family);
    if (it != ext.end() && o.format == "json") emit(o, serialize(extended_decorate(it->second, m)));
    else emit(o, format_map(o, m));
    return (o.strict && m.truncated()) ? 3 : 0;
}

int run_superset(const Options& o)
{
    GroupInfo g = group_info(o.group);
    ChamberSet s = superset(g.kind, rep_for(o, g.kind), budgets(o), method(o));
    emit(o, format_set(o, s));
    return (o.strict && s.window.truncated) ? 3 : 0;
}

int run_subset(const Options& o)
{
    GroupInfo g = group_info(o.group);
    emit(o, format_set(o, subset(g.kind, rep_for(o, g.kind), o.radius, o.seed_only)));
    return 0;
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run_compare(const Options& o)
{
    ChamberSet a, b;
    if (o.files.size() == 2) {
        a = deserialize_chamber_set(read_file(o.files[0]));
        b = deserialize_chamber_set(read_file(o.files[1]));
    } else if (o.files.empty()) {
        GroupInfo g = group_info(o.group);
        ConjugacyRep rep = rep_for(o, g.kind);
        a = subset(g.kind, rep, o.radius, o.seed_only);
        b = superset(g.kind, rep, budgets(o), method(o));
    } else {
        throw CLI::ValidationError("compare", "expects zero or two files");
    }
    CompareReport r = compare(a, b);
    const RootSystem& rs = root_system(a.group);
    std::ostringstream out;
    out << (r.exact ? "exact" : "differ") << " common=" << r.common << " only-first=" << r.only_first.size()
        << " only-second=" << r.only_second.size() << "\n";
    for (const Alcove& x : r.only_first) out << "< " << alcove_label(rs, x) << "\n";
    for (const Alcove& x : r.only_second) out << "> " << alcove_label(rs, x) << "\n";
    emit(o, out.str());
    return (o.strict && b.window.truncated) ? 3 : 0;
}

int run_fold(const Options& o)
{
    GroupInfo g = group_info(o.group);
    const RootSystem& rs = root_system(g.kind);
    std::vector<int> labels;
    for (auto v : parse_ints(o.labels)) {
        if (v < 0 || v > rs.rank) throw std::invalid_argument("label out of range: " + std::to_string(v));
        labels.push_back(static_cast<int>(v));
    }
    Alcove start = o.start.empty() ? identity_element() : parse_element(rs, o.start);
    GalleryType t{start, labels};
    ChamberSet s;
    s.group = g.kind;
    s.b = identity_rep(g.kind);
    s.kind = SetKind::Exact;
    s.flags = {"fold"};
    s.window.radius = 0;
    for (const Alcove& a : fold_all(rs, t)) {
        s.chambers.push_back(a);
        s.window.radius = std::max(s.window.radius, length(rs, a));
        s.provenance.emplace(a, Provenance{"fold", start, o.labels});
    }
    emit(o, format_set(o, s));
    return 0;
}

int run_sl2_table(const Options& o)
{
    std::ostringstream out;
    for (int parity = 0; parity < 2; ++parity) {
        out << (parity == 0 ? "i even\n" : "i odd\n");
        for (std::int64_t i = parity; i <= o.radius; i += 2) {
            out << i << " |";
            auto ss = sl2_inverse(i);
            for (std::size_t k = 0; k < ss.size(); ++k) out << (k ? "," : " ") << ss[k];
            out << "\n";
        }
    }
    emit(o, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Nonemptiness of affine Deligne-Lusztig varieties in rank one and two"};
    app.set_config("--config", "", "key=value file; command-line flags override it");
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--group", o.group)
        ->check(CLI::IsMember({"sl2", "gl2", "pgl2", "sl3", "gl3", "pgl3", "sp4", "gsp4", "psp4", "g2"}));
    app.add_option("--b", o.b, "exponents, e.g. 3,-1,-2");
    app.add_option("--radius", o.radius)->check(CLI::NonNegativeNumber);
    app.add_option("--pmax", o.p_max)->check(CLI::NonNegativeNumber);
    app.add_option("--qmax", o.q_max)->check(CLI::PositiveNumber);
    app.add_option("--depbudget", o.dep_budget)->check(CLI::NonNegativeNumber);
    app.add_option("--method", o.method)->check(CLI::IsMember({"classes", "complete", "halfinf"}));
    app.add_option("--format", o.format)->check(CLI::IsMember({"json", "svg", "ascii"}));
    app.add_option("--out", o.out);
    app.add_option("--threads", o.threads)->check(CLI::PositiveNumber);
    app.add_flag("--seed-only", o.seed_only, "skip the closure step of the subset");
    app.add_flag("--strict", o.strict, "exit 3 when a budget truncated the superset");
    app.add_option("--variant", o.variant, "gl2/pgl2 representative")
        ->check(CLI::IsMember({"diagonal", "antidiagonal"}));

    auto* solve_cmd = app.add_subcommand("solve", "verdict for every chamber of the window");
    auto* sup_cmd = app.add_subcommand("superset", "chambers that may be nonempty");
    auto* sub_cmd = app.add_subcommand("subset", "chambers certified nonempty");
    auto* cmp_cmd = app.add_subcommand("compare", "subset against superset, or two documents");
    cmp_cmd->add_option("files", o.files, "two chamber-set documents");
    auto* fold_cmd = app.add_subcommand("fold", "folding results of one gallery type");
    fold_cmd->add_option("--labels", o.labels, "cotypes, e.g. \"1 2 0\"")->required();
    fold_cmd->add_option("--start", o.start, "start alcove t[..]·w<index>");
    auto* render_cmd = app.add_subcommand("render", "solve and draw");
    auto* table_cmd = app.add_subcommand("sl2-table", "s values per chamber index, up to --radius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    try {
        if (solve_cmd->parsed()) return run_solve(o);
        if (sup_cmd->parsed()) return run_superset(o);
        if (sub_cmd->parsed()) return run_subset(o);
        if (cmp_cmd->parsed()) return run_compare(o);
        if (fold_cmd->parsed()) return run_fold(o);
        if (render_cmd->parsed()) {
            if (app.get_option("--format")->count() == 0) o.format = "svg";
            return run_solve(o);
        }
        if (table_cmd->parsed()) {
            if (app.get_option("--radius")->count() == 0) o.radius = 9;
            return run_sl2_table(o);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
