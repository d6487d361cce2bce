#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "cechhom/abelian_groups.hpp"
#include "cechhom/cech_elements.hpp"
#include "cechhom/errors.hpp"
#include "cechhom/hall_basis.hpp"
#include "cechhom/hilton_milnor.hpp"
#include "cechhom/random.hpp"
#include "cechhom/sphere_table.hpp"
#include "cechhom/whitehead.hpp"

namespace cechhom::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string table;
    std::string format = "text";
    bool annotate = false;
    int n = 0;
    int m = 0;
    int k = 0;
    int j = 0;
    int J = 0;
    std::string grading;
    std::string degrees;
    std::string expr;
    bool random = false;
    std::uint64_t seed = 1;
    int levels = 0;
    int count = 0;
    std::string file;
    std::string other_file;
    int offset = 0;
    std::string m_range = "3..6";
};

SphereGroupTable load_table(const std::string& requested) {
    std::string source = requested;
    if (source.empty())
        if (const char* env = std::getenv(kTableEnv)) source = env;
    if (source.empty() || source == "seed") return SphereGroupTable::seed();
    return SphereGroupTable::load(source);
}

GradingSequence grading_of(const Options& o, int default_m = 2) {
    if (!o.grading.empty()) return GradingSequence::parse(o.grading);
    const int m = o.m ? o.m : default_m;
    if (m < 2) throw DomainError("-m must be >= 2");
    return GradingSequence::constant(m - 1);
}

json machine(const GroupExpr& e) { return json::parse(render(e, RenderMode::Machine)); }

bool json_mode(const Options& o) { return o.format == "json"; }

constexpr const char* kTrivial = "0 (trivial by connectivity)";

int emit_expr(const Options& o, std::ostream& out, const GroupExpr& e, bool trivial,
              const std::vector<std::string>& notes) {
    if (json_mode(o)) {
        json doc{{"value", render(e)}, {"expr", machine(e)}, {"trivial_by_connectivity", trivial}};
        if (o.annotate) doc["annotations"] = notes;
        out << doc.dump(2) << "\n";
        return kOk;
    }
    out << (trivial ? std::string(kTrivial) : render(e)) << "\n";
    if (o.annotate)
        for (const auto& line : notes) out << "  " << line << "\n";
    return kOk;
}

std::string sphere_name(int n, int q) { return "pi_" + std::to_string(n) + "(S^" + std::to_string(q) + ")"; }

int cmd_earring(const Options& o, const SphereGroupTable& t, std::ostream& out) {
    const GroupExpr e = earring_formula(o.n, o.m, t);
    std::vector<std::string> notes;
    for (int j = 1; j <= (o.n - 1) / (o.m - 1); ++j)
        notes.push_back("weight " + std::to_string(j) + ": " + sphere_name(o.n, (o.m - 1) * j + 1) +
                        "^N = " + render(weight_summand(o.n, o.m, j, t)));
    return emit_expr(o, out, e, o.n < o.m, notes);
}

int cmd_wedge(const Options& o, const SphereGroupTable& t, std::ostream& out) {
    const GradingSequence g = grading_of(o);
    const GroupExpr e = cech_decompose(o.n, g, t);
    const bool trivial = o.n <= g.first();
    std::vector<std::string> notes;
    if (!trivial)
        for (const auto& [h, size] : height_class_census(o.n, g))
            notes.push_back("height " + std::to_string(h) + ": " +
                            (size.countably_infinite ? std::string("N") : std::to_string(size.count)) + " words x " +
                            sphere_name(o.n, h + 1) + " = " + render(resolve(GroupExpr::sphere(o.n, h + 1), t)));
    return emit_expr(o, out, e, trivial, notes);
}

int cmd_relative(const Options& o, const SphereGroupTable& t, std::ostream& out) {
    return emit_expr(o, out, relative_cech(o.n, o.m, t), o.n < o.m, {});
}

int cmd_weight(const Options& o, const SphereGroupTable& t, std::ostream& out) {
    return emit_expr(o, out, weight_summand(o.n, o.m, o.j, t), o.n < o.m, {});
}

int cmd_g(const Options& o, const SphereGroupTable& t, std::ostream& out) {
    const GGroupForms forms = g_group_expr(o.n, o.m, t);
    if (json_mode(o)) {
        out << json{{"value", render(forms.distributed)},
                    {"direct", machine(forms.direct)},
                    {"distributed", machine(forms.distributed)},
                    {"equal", forms.equal}}
                   .dump(2)
            << "\n";
        return kOk;
    }
    out << render(forms.distributed) << "\n";
    if (o.annotate) {
        out << "  direct form: " << render(forms.direct) << "\n";
        out << "  regrouped forms agree: " << (forms.equal ? "yes" : "no") << "\n";
    }
    return forms.equal ? kOk : kVerificationFailed;
}

int cmd_hall(const Options& o, std::ostream& out) {
    const GradingSequence g = grading_of(o);
    const HallSet set = HallSet::generate(o.k, o.J);
    if (json_mode(o)) {
        json rows = json::array();
        for (const auto& w : set.words())
            rows.push_back({{"word", w.to_string()}, {"weight", w.length()}, {"height", height(w, g)}});
        out << json{{"letters", o.k}, {"max_weight", o.J}, {"grading", g.to_string()}, {"words", rows}}.dump(2)
            << "\n";
        return kOk;
    }
    out << std::left << std::setw(8) << "weight" << std::setw(8) << "height" << "word\n";
    for (const auto& w : set.words())
        out << std::left << std::setw(8) << w.length() << std::setw(8) << height(w, g) << w.to_string() << "\n";
    return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
    if (o.k < 1 || o.j < 1) throw DomainError("count needs -k >= 1 and -j >= 1");
    const auto c = necklace_count(static_cast<std::uint64_t>(o.k), static_cast<std::uint64_t>(o.j));
    if (json_mode(o))
        out << json{{"letters", o.k}, {"weight", o.j}, {"count", c}}.dump(2) << "\n";
    else
        out << c << "\n";
    return kOk;
}

int cmd_hm(const Options& o, const SphereGroupTable& t, std::ostream& out) {
    const WedgeDecomposition d = decompose_wedge(o.n, o.k, grading_of(o), t);
    if (json_mode(o)) {
        json rows = json::array();
        for (const auto& s : d.summands)
            rows.push_back({{"word", s.word.to_string()},
                            {"height", s.height},
                            {"sphere", s.height + 1},
                            {"group", render(s.group)},
                            {"expr", machine(s.group)}});
        out << json{{"n", d.n},
                    {"k", d.k},
                    {"grading", d.grading.to_string()},
                    {"trivial_by_connectivity", d.trivial_by_connectivity},
                    {"summands", rows},
                    {"total", render(d.total())}}
                   .dump(2)
            << "\n";
        return kOk;
    }
    if (d.trivial_by_connectivity) {
        out << kTrivial << "\n";
        return kOk;
    }
    std::size_t width = 0;
    for (const auto& s : d.summands) width = std::max(width, s.word.to_string().size());
    for (const auto& s : d.summands)
        out << std::left << std::setw(static_cast<int>(width + 2)) << s.word.to_string() << "h=" << std::setw(4)
            << s.height << sphere_name(d.n, s.height + 1) << " = " << render(s.group) << "\n";
    if (o.annotate) out << "  total: " << render(d.total()) << "\n";
    return kOk;
}

int cmd_bracket(const Options& o, std::ostream& out) {
    const BracketExpr e = BracketExpr::parse(o.expr);
    const LetterDegrees degrees = o.degrees.empty() ? LetterDegrees::constant(o.m ? o.m : 2)
                                                    : LetterDegrees::from_grading(GradingSequence::parse(o.degrees));
    const FormalSum expanded = expand(e, degrees);
    int letters = 1;
    for (const auto& [w, c] : expanded.terms()) letters = std::max(letters, w.max_letter());
    const HallNormalForm nf = hall_normalize(expanded, letters);
    FormalSum hall(degrees);
    for (const auto& [w, c] : nf.hall) hall.add(w, c);
    if (json_mode(o)) {
        json coeffs = json::object();
        for (const auto& [w, c] : nf.hall) coeffs[w.to_string()] = c;
        out << json{{"expanded", expanded.to_string()}, {"hall", coeffs}, {"residual", nf.residual.to_string()}}.dump(2)
            << "\n";
        return kOk;
    }
    out << "expanded: " << expanded.to_string() << "\n";
    out << "hall:     " << hall.to_string() << "\n";
    out << "residual: " << nf.residual.to_string() << "\n";
    return kOk;
}

struct Report {
    std::string name;
    std::size_t cases = 0;
    Verdict verdict;
};

int emit_report(const Options& o, std::ostream& out, const Report& r, const std::string& summary) {
    if (json_mode(o)) {
        json doc{{"check", r.name}, {"passed", r.verdict.passed}, {"cases", r.cases}, {"summary", summary}};
        if (!r.verdict.passed) {
            doc["level"] = r.verdict.k;
            doc["detail"] = r.verdict.detail;
            if (r.verdict.word) doc["word"] = r.verdict.word->to_string();
        }
        out << doc.dump(2) << "\n";
    } else if (r.verdict.passed) {
        out << "PASS " << r.name << ": " << summary << "\n";
    } else {
        out << "FAIL " << r.name << ": " << r.verdict.detail << "\n";
    }
    return r.verdict.passed ? kOk : kVerificationFailed;
}

void require_source(const Options& o) {
    if (o.random == !o.file.empty()) throw DomainError("give exactly one of --random or --file");
}

int cmd_verify_edge(const Options& o, const SphereGroupTable& t, std::ostream& out) {
    require_source(o);
    const int levels = o.levels ? o.levels : 6;
    Report r{"edge", 0, {}};
    std::string summary;
    if (o.random) {
        const int m = o.m ? o.m : 2;
        const int count = o.count ? o.count : 100;
        Rng rng(o.seed);
        for (int c = 0; c < count && r.verdict; ++c, ++r.cases) {
            const EpsilonOracle a = random_sparse_epsilon(rng);
            const EpsilonOracle b = random_sparse_epsilon(rng);
            r.verdict = verify_edge(a, m, levels, t);
            for (int k = 1; r.verdict && k <= levels; ++k) {
                const int n = 2 * m - 1;
                const Coordinates joint = project_level(f_alpha(a, m) + f_alpha(b, m), k, n, t);
                if (joint != project_level(f_alpha(a + b, m), k, n, t))
                    r.verdict = {false, k, std::nullopt, "F_alpha + F_beta != F_{alpha+beta} at level " +
                                                             std::to_string(k)};
            }
        }
        summary = std::to_string(r.cases) + " random eps, seed " + std::to_string(o.seed) + ", m=" +
                  std::to_string(m) + ", levels <= " + std::to_string(levels);
    } else {
        const CoherentElement e = load_element(o.file, t);
        if (!e.epsilon()) throw DomainError("element file has no eps lines");
        r.verdict = verify_edge(*e.epsilon(), e.m(), levels, t);
        r.cases = 1;
        summary = o.file + ", m=" + std::to_string(e.m()) + ", levels <= " + std::to_string(levels);
    }
    return emit_report(o, out, r, summary);
}

CoherentElement random_coherent(Rng& rng, int n, int m, const SphereGroupTable& t) {
    const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
    if (kind == 1 && n == 2 * m - 1) return CoherentElement::weight2_family(m, random_sparse_epsilon(rng));
    if (kind == 2 && (n - 1) / (m - 1) >= 2) {
        try {
            return random_gtuple(rng, n, m, 5, t);
        } catch (const DomainError&) {
        }
    }
    return random_finite_support(rng, n, m, 5, t);
}

int cmd_verify_coherence(const Options& o, const SphereGroupTable& t, std::ostream& out) {
    require_source(o);
    const int levels = o.levels ? o.levels : 6;
    Report r{"coherence", 0, {}};
    std::string summary;
    if (o.random) {
        const int m = o.m ? o.m : 2;
        const int n = o.n ? o.n : 2 * m - 1;
        const int count = o.count ? o.count : 100;
        Rng rng(o.seed);
        for (int c = 0; c < count && r.verdict; ++c, ++r.cases) r.verdict = check_coherence(random_coherent(rng, n, m, t), levels);
        summary = std::to_string(r.cases) + " random elements, seed " + std::to_string(o.seed) + ", n=" +
                  std::to_string(n) + ", m=" + std::to_string(m) + ", levels <= " + std::to_string(levels);
    } else {
        const CoherentElement e = load_element(o.file, t);
        r.verdict = check_coherence(e, levels);
        r.cases = 1;
        summary = o.file + ", levels <= " + std::to_string(levels);
    }
    return emit_report(o, out, r, summary);
}

int cmd_verify_theta(const Options& o, const SphereGroupTable& t, std::ostream& out) {
    require_source(o);
    const int levels = o.levels ? o.levels : 5;
    Report r{"theta", 0, {}};
    std::string summary;
    if (o.random) {
        const int m = o.m ? o.m : 2;
        const int n = o.n ? o.n : 4;
        const int count = o.count ? o.count : 100;
        Rng rng(o.seed);
        for (int c = 0; c < count && r.verdict; ++c, ++r.cases) {
            const CoherentElement a = random_gtuple(rng, n, m, 4, t);
            const CoherentElement b = random_gtuple(rng, n, m, 4, t);
            r.verdict = verify_theta_additive(a, b, levels, t);
            if (r.verdict && !in_kernel_sigma(a, levels))
                r.verdict = {false, 0, std::nullopt, "Theta image has a weight-one coordinate"};
        }
        summary = std::to_string(r.cases) + " random G-tuple pairs, seed " + std::to_string(o.seed) + ", n=" +
                  std::to_string(n) + ", m=" + std::to_string(m) + ", levels <= " + std::to_string(levels);
    } else {
        const CoherentElement a = load_element(o.file, t);
        const CoherentElement b = o.other_file.empty() ? CoherentElement::gtuple(a.n(), a.m(), {}, t)
                                                       : load_element(o.other_file, t);
        r.verdict = verify_theta_additive(a, b, levels, t);
        r.cases = 1;
        summary = o.file + (o.other_file.empty() ? "" : " + " + o.other_file) + ", levels <= " + std::to_string(levels);
    }
    return emit_report(o, out, r, summary);
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("bad range '" + text + "', expected <first>..<last>");
    }
}

int cmd_verify_stabilize(const Options& o, const SphereGroupTable& t, std::ostream& out) {
    const auto [first, last] = parse_range(o.m_range);
    const StabilizationReport report = stabilization_report(o.offset, first, last, t);
    if (json_mode(o)) {
        json rows = json::array();
        for (const auto& row : report.rows)
            rows.push_back({{"m", row.m}, {"value", render(row.value)}, {"in_stable_range", row.in_stable_range}});
        out << json{{"offset", report.offset},
                    {"rows", rows},
                    {"stable", report.stable},
                    {"verdict", report.verdict()},
                    {"warnings", report.warnings}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& row : report.rows)
            out << "m=" << row.m << "  pi_" << row.m + o.offset << "  " << render(row.value)
                << (row.in_stable_range ? "" : "  (below stable range)") << "\n";
        for (const auto& w : report.warnings) out << "warning: " << w << "\n";
        out << report.verdict() << "\n";
    }
    return report.stable ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Cech homotopy groups of shrinking wedges of spheres", "cechhom"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--table", o.table, "sphere-group table: 'seed' or a file path (default: $CECHHOM_TABLE or seed)");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

    auto* cech = app.add_subcommand("cech", "Cech homotopy group expressions")->require_subcommand(1)->fallthrough();
    cech->add_flag("--annotate", o.annotate, "list the weight or height summands");
    auto earring_like = [&](const std::string& name, const std::string& help) {
        auto* sub = cech->add_subcommand(name, help)->fallthrough();
        sub->add_option("-m", o.m, "sphere dimension of the earring")->required()->check(CLI::Range(2, 1000));
        sub->add_option("-n", o.n, "homotopy degree")->required()->check(CLI::Range(2, 1000));
        return sub;
    };
    auto* earring = earring_like("earring", "pi_n of the m-dimensional earring, closed formula");
    auto* relative = earring_like("relative", "sum of the weight >= 2 summands");
    auto* weight = earring_like("weight", "the weight-j summand");
    weight->add_option("-j", o.j, "weight")->required()->check(CLI::Range(1, 1000));
    auto* ggroup = earring_like("g", "the subgroup G_n(m) in both groupings");
    auto* wedge = cech->add_subcommand("wedge", "general shrinking wedge, grouped by height")->fallthrough();
    auto* wedge_grading = wedge->add_option("--grading", o.grading, "r_1,...,r_p;tail");
    wedge->add_option("-m", o.m, "constant grading r_i = m - 1")->excludes(wedge_grading);
    wedge->add_option("-n", o.n, "homotopy degree")->required()->check(CLI::Range(2, 1000));

    auto* hall = app.add_subcommand("hall", "list Hall words")->fallthrough();
    hall->add_option("-k", o.k, "letters")->required()->check(CLI::Range(1, 1000));
    hall->add_option("-J", o.J, "maximal weight")->required()->check(CLI::Range(1, 64));
    auto* hall_grading = hall->add_option("--grading", o.grading, "grading used for the height column");
    hall->add_option("-m", o.m, "constant grading r_i = m - 1")->excludes(hall_grading);

    auto* count = app.add_subcommand("count", "necklace count M_k(j)")->fallthrough();
    count->add_option("-k", o.k, "letters")->required();
    count->add_option("-j", o.j, "weight")->required();

    auto* hm = app.add_subcommand("hm", "Hilton-Milnor decomposition of pi_n of a finite wedge")->fallthrough();
    hm->add_option("-n", o.n, "homotopy degree")->required()->check(CLI::Range(2, 1000));
    hm->add_option("-k", o.k, "number of spheres")->required()->check(CLI::Range(1, 1000));
    auto* hm_grading = hm->add_option("--grading", o.grading, "r_1,...,r_p;tail");
    hm->add_option("-m", o.m, "constant grading r_i = m - 1")->excludes(hm_grading);
    hm->add_flag("--annotate", o.annotate, "print the total");

    auto* bracket = app.add_subcommand("bracket", "expand and normalize a bracket expression")->fallthrough();
    bracket->add_option("expr", o.expr, "e.g. \"[a1,[a2,a3]]\"")->required();
    auto* bracket_degrees = bracket->add_option("--grading", o.degrees, "r_1,...,r_p;tail (degrees r_i + 1)");
    bracket->add_option("--m,-m", o.m, "every generator has degree m")->excludes(bracket_degrees);

    auto* table_cmd = app.add_subcommand("table", "print the active sphere-group table")->fallthrough();

    auto* verify = app.add_subcommand("verify", "run a verification")->require_subcommand(1)->fallthrough();
    auto add_source = [&](CLI::App* sub) {
        sub->add_flag("--random", o.random, "generate random inputs");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--count", o.count, "number of random cases");
        sub->add_option("--file", o.file, "element description file")->check(CLI::ExistingFile);
        sub->add_option("--levels", o.levels, "highest level checked")->check(CLI::Range(2, 64));
        sub->add_option("--m,-m", o.m, "earring dimension")->check(CLI::Range(2, 1000));
        sub->add_option("--n,-n", o.n, "homotopy degree")->check(CLI::Range(2, 1000));
    };
    auto* v_edge = verify->add_subcommand("edge", "Psi(F_alpha) = alpha and eps-additivity")->fallthrough();
    add_source(v_edge);
    auto* v_coherence = verify->add_subcommand("coherence", "tower coherence of elements")->fallthrough();
    add_source(v_coherence);
    auto* v_theta = verify->add_subcommand("theta", "additivity of Theta and Psi o Theta = phi")->fallthrough();
    add_source(v_theta);
    v_theta->add_option("--with", o.other_file, "second G-tuple file")->check(CLI::ExistingFile);
    auto* v_stab = verify->add_subcommand("stabilize", "stabilization of pi_{m+s} of the m-earring")->fallthrough();
    v_stab->add_option("-s", o.offset, "offset s")->check(CLI::Range(0, 1000));
    v_stab->add_option("--m-range", o.m_range, "first..last");

    std::vector<const char*> argv{"cechhom"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (hall->parsed()) return cmd_hall(o, out);
        if (count->parsed()) return cmd_count(o, out);
        if (bracket->parsed()) return cmd_bracket(o, out);
        const SphereGroupTable table = load_table(o.table);
        if (table_cmd->parsed()) {
            out << table.render();
            return kOk;
        }
        if (hm->parsed()) return cmd_hm(o, table, out);
        if (earring->parsed()) return cmd_earring(o, table, out);
        if (relative->parsed()) return cmd_relative(o, table, out);
        if (weight->parsed()) return cmd_weight(o, table, out);
        if (ggroup->parsed()) return cmd_g(o, table, out);
        if (wedge->parsed()) return cmd_wedge(o, table, out);
        if (v_edge->parsed()) return cmd_verify_edge(o, table, out);
        if (v_coherence->parsed()) return cmd_verify_coherence(o, table, out);
        if (v_theta->parsed()) return cmd_verify_theta(o, table, out);
        if (v_stab->parsed()) return cmd_verify_stabilize(o, table, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    err << "error: no command\n";
    return kUsageError;
}

}  // namespace cechhom::cli
