#include "reeder/cli.hpp"

#include "reeder/dynkin.hpp"
#include "reeder/errors.hpp"
#include "reeder/forms.hpp"
#include "reeder/homspace.hpp"
#include "reeder/json_io.hpp"
#include "reeder/lattice.hpp"
#include "reeder/puzzle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace reeder {
namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_unsupported = 3;
constexpr int exit_cap = 4;

// Options shared by the board-taking subcommands.
struct CommonOpts {
    std::string form;
    std::string diagram_json;
    std::string series;
    int rank = 0;
    std::vector<int> twist;
    bool bourbaki = false;
    bool json = false;
    bool tsv = false;
    int cap = 24;
};

void add_output_flags(CLI::App* sub, CommonOpts& o) {
    auto* j = sub->add_flag("--json", o.json, "emit one JSON document on stdout");
    auto* t = sub->add_flag("--tsv", o.tsv, "emit tab-separated rows with a header line");
    j->excludes(t);
    t->excludes(j);
}

void add_board_flags(CLI::App* sub, CommonOpts& o, bool with_twist) {
    sub->add_option("--form", o.form, "form name, e.g. SU(2,3), Spin(5,7), EV");
    sub->add_option("--diagram", o.diagram_json, R"(diagram JSON, e.g. {"series":"A","rank":4})");
    sub->add_option("--type", o.series, "series letter A..G (with --rank)");
    sub->add_option("--rank", o.rank, "diagram rank (with --type)");
    if (with_twist)
        sub->add_option("--twist", o.twist, "black vertices of the twisting diagram")
            ->delimiter(',');
    sub->add_flag("--bourbaki", o.bourbaki, "interpret input vertex indices in Bourbaki numbering");
    sub->add_option("--cap", o.cap, "largest board size enumerated")->capture_default_str();
}

int translate_vertex(const DynkinType& t, int v, bool bourbaki) {
    if (!bourbaki || v == 0) return v; // the affine vertex has no Bourbaki number
    const auto table = from_bourbaki(t);
    if (v < 1 || v > static_cast<int>(table.size()))
        throw ArgumentError("vertex " + std::to_string(v) + " out of range for " + type_name(t));
    return table[static_cast<size_t>(v) - 1];
}

std::vector<int> translate_vertices(const DynkinType& t, std::vector<int> vs, bool bourbaki) {
    for (int& v : vs) v = translate_vertex(t, v, bourbaki);
    std::sort(vs.begin(), vs.end());
    return vs;
}

Labeling coloring_from_twist(const DynkinType& t, const std::vector<int>& twist, bool bourbaki) {
    Labeling c = 0;
    for (int raw : twist) {
        const int v = translate_vertex(t, raw, bourbaki);
        if (v < 1 || v > t.rank)
            throw ArgumentError("twist vertex " + std::to_string(raw) + " out of range");
        c |= vertex_bit(v);
    }
    return c;
}

DynkinType type_from_opts(const CommonOpts& o) {
    if (!o.diagram_json.empty()) {
        Json j;
        try {
            j = Json::parse(o.diagram_json);
        } catch (const nlohmann::json::exception& e) {
            throw ArgumentError(std::string("bad --diagram JSON: ") + e.what());
        }
        return type_from_json(j);
    }
    if (o.series.size() != 1) throw ArgumentError("--type wants a single series letter A..G");
    if (o.rank <= 0) throw ArgumentError("--type needs --rank");
    return make_type(static_cast<Series>(o.series[0]), o.rank);
}

// Exactly one of --form / --diagram / --type selects the board.
int selection_count(const CommonOpts& o) {
    return static_cast<int>(!o.form.empty()) + static_cast<int>(!o.diagram_json.empty()) +
           static_cast<int>(!o.series.empty() || o.rank > 0);
}

RealFormSpec spec_from_opts(const CommonOpts& o) {
    if (selection_count(o) != 1)
        throw ArgumentError("pick exactly one of --form, --diagram, --type/--rank");
    if (!o.form.empty()) {
        if (!o.twist.empty()) throw ArgumentError("--twist conflicts with --form");
        return named_form(o.form);
    }
    const DynkinType t = type_from_opts(o);
    return make_form(t, automorphisms(build_diagram(t)).front(),
                     coloring_from_twist(t, o.twist, o.bourbaki));
}

std::vector<int> complement_within(int lo, int hi, const std::vector<int>& removed) {
    std::vector<int> flag(static_cast<size_t>(hi - lo + 1), 0);
    for (int v : removed) {
        if (v < lo || v > hi)
            throw ArgumentError("vertex " + std::to_string(v) + " not in [" + std::to_string(lo) +
                                ".." + std::to_string(hi) + "]");
        if (flag[static_cast<size_t>(v - lo)]++) throw ArgumentError("duplicate vertex in list");
    }
    std::vector<int> keep;
    for (int v = lo; v <= hi; ++v)
        if (!flag[static_cast<size_t>(v - lo)]) keep.push_back(v);
    return keep;
}

void print_tsv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
    out << "\n";
}

// ---------------------------------------------------------------- orbits --

int cmd_orbits(const CommonOpts& o, std::ostream& out) {
    const RealFormSpec spec = spec_from_opts(o);
    const ReducedPuzzle board = reduce_outer(spec);
    const OrbitDecomposition dec = enumerate_orbits(board.instance, o.cap);

    if (o.json) {
        Json j = orbits_to_json(board.instance, dec);
        if (!o.form.empty()) {
            Json wrapped;
            wrapped["form"] = spec_to_json(spec);
            for (auto& [k, v] : j.items()) wrapped[k] = v;
            j = std::move(wrapped);
        }
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    if (o.tsv) {
        print_tsv_row(out, {"id", "rep", "size"});
        for (size_t i = 0; i < dec.reps.size(); ++i)
            print_tsv_row(out, {std::to_string(i), format_labeling(dec.reps[i], dec.n),
                                std::to_string(dec.sizes[i])});
        return exit_ok;
    }
    out << "classes: " << dec.class_count() << "\n";
    for (size_t i = 0; i < dec.reps.size(); ++i)
        out << format_labeling(dec.reps[i], dec.n) << " size " << dec.sizes[i] << "\n";
    return exit_ok;
}

// ------------------------------------------------------------------- h1 --

int cmd_h1(const CommonOpts& o, std::ostream& out) {
    const RealFormSpec spec = spec_from_opts(o);
    const std::uint64_t count = h1_cardinality(spec, o.cap);
    std::optional<std::uint64_t> closed;
    try {
        closed = closed_form_count(spec);
    } catch (const UnsupportedError&) {
        // families outside the stated formulas only report the enumerated count
    }

    if (o.json) {
        Json j;
        j["form"] = spec_to_json(spec);
        j["count"] = count;
        if (closed) j["closed_form"] = *closed;
        Json reps = Json::array();
        for (Labeling a : h1_representatives(spec, o.cap))
            reps.push_back(format_labeling(a, spec.dtype.rank));
        j["representatives"] = std::move(reps);
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    if (o.tsv) {
        print_tsv_row(out, {"name", "label", "count"});
        print_tsv_row(out,
                      {spec.display_name, twisting_label(spec), std::to_string(count)});
        return exit_ok;
    }
    out << count << "\n";
    return exit_ok;
}

// ------------------------------------------------------------------ pi0 --

int cmd_pi0(const CommonOpts& o, const std::vector<int>& keep_raw,
            const std::vector<int>& remove_raw, bool extended, std::ostream& out) {
    const RealFormSpec spec = spec_from_opts(o);
    const int n = spec.dtype.rank;
    if (keep_raw.empty() == remove_raw.empty())
        throw ArgumentError("pick exactly one of --keep, --remove");

    Pi0Result res;
    if (spec.inner()) {
        std::vector<int> keep =
            keep_raw.empty()
                ? complement_within(extended ? 0 : 1, n,
                                    translate_vertices(spec.dtype, remove_raw, o.bourbaki))
                : translate_vertices(spec.dtype, keep_raw, o.bourbaki);
        res = pi0_count(spec, keep, extended, o.cap);
    } else {
        if (extended) throw UnsupportedError("--extended needs an inner ambient form");
        std::vector<int> removed =
            remove_raw.empty()
                ? complement_within(1, n, translate_vertices(spec.dtype, keep_raw, o.bourbaki))
                : translate_vertices(spec.dtype, remove_raw, o.bourbaki);
        if (removed.size() != 1)
            throw UnsupportedError(
                "twisted ambient forms only support removing a single vertex");
        res = reduced_pi0(spec, removed.front(), o.cap);
    }

    if (o.json) {
        out << pi0_to_json(res).dump(2) << "\n";
        return exit_ok;
    }
    if (o.tsv) {
        print_tsv_row(out, {"count", "pi1_order", "ambient_classes", "subgroup_classes"});
        print_tsv_row(out, {std::to_string(res.count), res.pi1_order.str(),
                            std::to_string(res.ambient_class_count),
                            std::to_string(res.subgroup_class_count)});
        return exit_ok;
    }
    out << res.count << "\n";
    return exit_ok;
}

// ---------------------------------------------------------------- table --

int cmd_table(int max_rank, const CommonOpts& o, std::ostream& out) {
    struct Row {
        std::string name, label;
        std::uint64_t brute, closed;
        bool match;
    };
    std::vector<Row> rows;
    bool all_match = true;
    for (const RealFormSpec& spec : catalog_forms(max_rank)) {
        Row r;
        r.name = spec.display_name;
        r.label = twisting_label(spec);
        r.brute = h1_cardinality(spec, o.cap);
        r.closed = closed_form_count(spec);
        r.match = r.brute == r.closed;
        all_match = all_match && r.match;
        rows.push_back(std::move(r));
    }

    if (o.json) {
        Json j;
        j["max_classical_rank"] = max_rank;
        Json jr = Json::array();
        for (const Row& r : rows) {
            Json e;
            e["name"] = r.name;
            e["label"] = r.label;
            e["count"] = r.brute;
            e["closed_form"] = r.closed;
            e["match"] = r.match;
            jr.push_back(std::move(e));
        }
        j["rows"] = std::move(jr);
        j["all_match"] = all_match;
        out << j.dump(2) << "\n";
    } else if (o.tsv) {
        print_tsv_row(out, {"name", "label", "count", "closed_form", "match"});
        for (const Row& r : rows)
            print_tsv_row(out, {r.name, r.label, std::to_string(r.brute),
                                std::to_string(r.closed), r.match ? "yes" : "no"});
    } else {
        out << std::left << std::setw(18) << "name" << std::setw(12) << "label" << std::right
            << std::setw(7) << "count" << std::setw(8) << "closed" << "  match\n";
        for (const Row& r : rows)
            out << std::left << std::setw(18) << r.name << std::setw(12) << r.label << std::right
                << std::setw(7) << r.brute << std::setw(8) << r.closed << "  "
                << (r.match ? "yes" : "NO") << "\n";
        out << "all match: " << (all_match ? "yes" : "no") << "\n";
    }
    return all_match ? exit_ok : exit_mismatch;
}

// ------------------------------------------------------------- validate --

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

void check_form(const RealFormSpec& spec, std::vector<Check>& checks, int cap) {
    const std::string tag = spec.display_name + " [" + twisting_label(spec) + "]";
    if (spec.kac_nu) {
        KacDiagram kd{extend(build_diagram(spec.dtype)), *spec.kac_nu};
        const KacCheck kc = validate_kac(kd);
        checks.push_back({tag + " affine labels", kc.ok, kc.diagnostic});
        if (kc.ok) {
            auto [d, coloring] = kac_to_twisting(kd);
            const bool same = d.type == spec.dtype && coloring == spec.coloring;
            checks.push_back({tag + " affine labels reproduce twist bits", same,
                              same ? "" : "mismatch"});
        }
    }
    std::optional<std::uint64_t> closed;
    try {
        closed = closed_form_count(spec);
    } catch (const UnsupportedError&) {
    }
    const std::uint64_t brute = h1_cardinality(spec, cap);
    if (closed) {
        const bool same = *closed == brute;
        checks.push_back({tag + " count vs formula", same,
                          same ? "" : std::to_string(brute) + " != " + std::to_string(*closed)});
    }
    const auto reps = h1_representatives(spec, cap);
    checks.push_back({tag + " one representative per class", reps.size() == brute,
                      reps.size() == brute ? "" : "representative count mismatch"});
}

int cmd_validate(const CommonOpts& o, bool all, int max_rank, std::ostream& out) {
    std::vector<Check> checks;
    std::optional<Json> dump;

    if (all) {
        for (const RealFormSpec& spec : catalog_forms(max_rank)) check_form(spec, checks, o.cap);
    } else if (!o.form.empty()) {
        check_form(named_form(o.form), checks, o.cap);
    } else {
        const DynkinType t = type_from_opts(o);
        const ExtendedDiagram e = extend(build_diagram(t)); // self-validating
        const bool marks_ok = ((e.marks.transpose() * e.cartan).array() == 0).all();
        const bool comarks_ok = ((e.cartan * e.comarks).array() == 0).all();
        checks.push_back({type_name(t) + " marks annihilate the extended matrix", marks_ok, ""});
        checks.push_back(
            {type_name(t) + " comarks annihilate the extended matrix", comarks_ok, ""});
        bool invol = true;
        for (const auto& a : automorphisms(e.base)) {
            for (int i = 1; i <= t.rank; ++i)
                if (a.image(a.image(i)) != i) invol = false;
        }
        checks.push_back({type_name(t) + " symmetries are involutive", invol, ""});
        dump = extended_to_json(e);
    }

    const bool ok =
        std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });

    if (o.json) {
        Json j;
        if (dump) j["diagram"] = *dump;
        Json jc = Json::array();
        for (const Check& c : checks) {
            Json e;
            e["name"] = c.name;
            e["ok"] = c.ok;
            if (!c.detail.empty()) e["detail"] = c.detail;
            jc.push_back(std::move(e));
        }
        j["checks"] = std::move(jc);
        j["ok"] = ok;
        out << j.dump(2) << "\n";
    } else if (o.tsv) {
        print_tsv_row(out, {"check", "ok", "detail"});
        for (const Check& c : checks) print_tsv_row(out, {c.name, c.ok ? "yes" : "no", c.detail});
    } else {
        for (const Check& c : checks) {
            out << (c.ok ? "ok   " : "FAIL ") << c.name;
            if (!c.ok && !c.detail.empty()) out << ": " << c.detail;
            out << "\n";
        }
        out << (ok ? "all checks passed" : "checks FAILED") << "\n";
    }
    return ok ? exit_ok : exit_mismatch;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reeder puzzles: class counts on colored Dynkin diagrams,\n"
                 "real-form cohomology cardinalities and component counts of\n"
                 "real homogeneous spaces."};
    app.name("reeder");
    app.require_subcommand(1);

    CommonOpts orbits_o, h1_o, pi0_o, table_o, validate_o;
    std::vector<int> keep, remove;
    bool extended = false;
    bool validate_all = false;
    bool table_all = false;
    int max_rank = 12;

    auto* orbits = app.add_subcommand("orbits", "enumerate move classes of a board");
    add_board_flags(orbits, orbits_o, true);
    add_output_flags(orbits, orbits_o);

    auto* h1 = app.add_subcommand("h1", "class count of a real form");
    add_board_flags(h1, h1_o, true);
    add_output_flags(h1, h1_o);

    auto* pi0 = app.add_subcommand("pi0", "component count of a homogeneous space");
    add_board_flags(pi0, pi0_o, false);
    pi0->add_option("--keep", keep, "vertices generating the subgroup")->delimiter(',');
    pi0->add_option("--remove", remove, "complement form: vertices to drop")->delimiter(',');
    pi0->add_flag("--extended", extended, "admit vertex 0 of the extended diagram");
    add_output_flags(pi0, pi0_o);

    auto* table = app.add_subcommand("table", "full catalog: enumerated counts vs formulas");
    table->add_flag("--all", table_all, "every cataloged form (default)");
    table->add_option("--max-rank", max_rank, "classical-family rank bound")
        ->capture_default_str();
    table->add_option("--cap", table_o.cap, "largest board size enumerated")
        ->capture_default_str();
    add_output_flags(table, table_o);

    auto* validate = app.add_subcommand("validate", "internal consistency checks");
    add_board_flags(validate, validate_o, false);
    validate->add_flag("--all", validate_all, "check the whole catalog");
    validate->add_option("--max-rank", max_rank, "classical-family rank bound with --all")
        ->capture_default_str();
    add_output_flags(validate, validate_o);

    std::vector<const char*> argv;
    argv.push_back("reeder");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (orbits->parsed()) return cmd_orbits(orbits_o, out);
        if (h1->parsed()) return cmd_h1(h1_o, out);
        if (pi0->parsed()) return cmd_pi0(pi0_o, keep, remove, extended, out);
        if (table->parsed()) return cmd_table(max_rank, table_o, out);
        if (validate->parsed()) return cmd_validate(validate_o, validate_all, max_rank, out);
        err << "no subcommand\n";
        return exit_usage;
    } catch (const CapError& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return exit_cap;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const ArgumentError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const CatalogError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_mismatch;
    }
}

} // namespace reeder
