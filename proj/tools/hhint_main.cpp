// hhint: exact derivation, first-Hochschild-cohomology, and integrability
// computations for finite-dimensional algebras over small prime fields.
//
// Every command emits a single JSON document on stdout (or an aligned text
// table with --pretty). Reports are byte-deterministic for identical inputs
// and version. Exit codes: 0 success, 1 computation failure, 2 input error.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hhint/algebra.hpp"
#include "hhint/algebra_io.hpp"
#include "hhint/derivations.hpp"
#include "hhint/errors.hpp"
#include "hhint/integrate.hpp"
#include "hhint/selftest.hpp"
#include "hhint/symmetric.hpp"

using json = nlohmann::ordered_json;
using namespace hhint;

namespace {

constexpr const char* kVersion = "0.1.0";

// ------------------------------------------------------------------ flags

struct AlgebraFlags {
    std::string preset;
    uint32_t p = 0;
    std::string gens;
    int vars = 1;
    int m = 1;
    int n = 1;
    std::string spec_path;
};

void add_algebra_flags(CLI::App* cmd, AlgebraFlags& f) {
    cmd->add_option("--preset", f.preset, "algebra family: group | trunc-poly | nakayama | file")
        ->required()
        ->check(CLI::IsMember({"group", "trunc-poly", "nakayama", "file"}));
    cmd->add_option("--p", f.p, "prime modulus of the ground field");
    cmd->add_option("--gens", f.gens,
                    "group preset: permutation generators in cycle notation, e.g. \"(1 2),(1 2 3)\"");
    cmd->add_option("--vars", f.vars, "trunc-poly preset: number of variables (default 1)");
    cmd->add_option("--m", f.m, "nakayama preset: number of quiver vertices");
    cmd->add_option("--n", f.n, "nakayama preset: maximal path length kept");
    cmd->add_option("--spec", f.spec_path, "file preset: path to an algebra description file");
}

Algebra build_algebra(const AlgebraFlags& f) {
    if (f.preset == "file") {
        if (f.spec_path.empty()) throw Error("--preset file requires --spec <path>");
        Algebra a = load_algebra_file(f.spec_path);
        if (f.p != 0 && f.p != a.p())
            throw Error("--p disagrees with the modulus declared in " + f.spec_path);
        return a;
    }
    if (f.p == 0) throw Error("--preset " + f.preset + " requires --p");
    if (f.preset == "group") {
        if (f.gens.empty()) throw Error("--preset group requires --gens");
        return group_algebra(f.p, f.gens);
    }
    if (f.preset == "trunc-poly") return trunc_poly(f.p, f.vars);
    return nakayama(f.p, f.m, f.n);
}

// ----------------------------------------------------------------- output

json algebra_json(const Algebra& a) {
    char fp[17];
    std::snprintf(fp, sizeof fp, "%016llx", static_cast<unsigned long long>(a.fingerprint()));
    return json{{"p", a.p()},
                {"dim", a.dim()},
                {"kind", kind_name(a.kind())},
                {"name", a.name()},
                {"fingerprint", fp}};
}

void emit(const std::string& command, const json& algebra, const json& results,
          const std::string& provenance, bool pretty, const std::string& text) {
    if (pretty) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    json doc{{"command", command},
             {"algebra", algebra},
             {"results", results},
             {"provenance", provenance},
             {"version", kVersion}};
    std::fputs(doc.dump(2).c_str(), stdout);
    std::fputc('\n', stdout);
}

const char* status_name(IntegrabilityStatus s) {
    switch (s) {
        case IntegrabilityStatus::Certified: return "certified";
        case IntegrabilityStatus::ObstructedExact: return "obstructed-exact";
        case IntegrabilityStatus::ReachedOrder: return "reached-order";
        default: return "undecided";
    }
}

const char* provenance_name(IntegrabilityStatus s) {
    switch (s) {
        case IntegrabilityStatus::Certified: return "CERTIFIED";
        case IntegrabilityStatus::ObstructedExact: return "EXHAUSTIVE";
        case IntegrabilityStatus::ReachedOrder: return "HEURISTIC";
        default: return "UNDECIDED";
    }
}

int provenance_rank(IntegrabilityStatus s) {
    switch (s) {
        case IntegrabilityStatus::Certified: return 0;
        case IntegrabilityStatus::ObstructedExact: return 1;
        case IntegrabilityStatus::ReachedOrder: return 2;
        default: return 3;
    }
}

std::string weakest_provenance(const std::vector<ClassIntegrability>& classes) {
    const char* names[] = {"CERTIFIED", "EXHAUSTIVE", "HEURISTIC", "UNDECIDED"};
    int worst = 0;
    for (const ClassIntegrability& c : classes) worst = std::max(worst, provenance_rank(c.status));
    return names[worst];
}

// --------------------------------------------------------------- commands

void cmd_algebra(const Algebra& a, bool pretty) {
    json results{{"dim", a.dim()},
                 {"center_dim", a.center().dim()},
                 {"radical_dim", a.radical_known() ? json(a.radical().dim()) : json(nullptr)},
                 {"commutative", a.is_commutative()},
                 {"generators", a.gens().size()}};
    std::ostringstream os;
    os << "algebra " << a.name() << " (p = " << a.p() << ")\n"
       << "  dim        " << a.dim() << "\n"
       << "  center     " << a.center().dim() << "\n"
       << "  radical    ";
    if (a.radical_known())
        os << a.radical().dim() << "\n";
    else
        os << "(not available)\n";
    os << "  generators " << a.gens().size() << "\n";
    emit("algebra", algebra_json(a), results, "CERTIFIED", pretty, os.str());
}

void cmd_hh1(const Algebra& a, bool pretty) {
    HH1 h = hh1(a);
    json results{{"der_dim", h.der.dim()}, {"inner_dim", h.inn.dim()}, {"hh1_dim", h.dim()}};
    std::ostringstream os;
    os << "derivations " << h.der.dim() << ", inner " << h.inn.dim() << ", outer classes "
       << h.dim() << "\n";
    emit("hh1", algebra_json(a), results, "CERTIFIED", pretty, os.str());
}

// Coordinates of the derivation `target` over (class representatives, inner
// basis); returns the class coordinates only.
std::vector<uint32_t> class_coordinates(const Algebra& a, const HH1& h, const FMatrix& target) {
    const Index d = a.dim();
    const Index hd = h.dim();
    const Index k = h.inn.dim();
    const Index w = hd + k + 1;
    std::vector<FVector> reps_flat;
    reps_flat.reserve(static_cast<size_t>(hd));
    for (const FMatrix& r : h.reps) reps_flat.push_back(vec_endo(r));
    FVector tv = vec_endo(target);

    RowReducer red(w, a.p());
    std::vector<uint32_t> row(static_cast<size_t>(w));
    for (Index c = 0; c < d * d; ++c) {
        for (Index t = 0; t < hd; ++t)
            row[static_cast<size_t>(t)] = static_cast<uint32_t>(reps_flat[static_cast<size_t>(t)](c).value());
        for (Index s = 0; s < k; ++s)
            row[static_cast<size_t>(hd + s)] = static_cast<uint32_t>(h.inn.basis()(s, c).value());
        row[static_cast<size_t>(w - 1)] = static_cast<uint32_t>(tv(c).value());
        red.add_raw(row);
    }
    if (!red.pivots().empty() && red.pivots().back() == w - 1)
        throw Error("bracket left the derivation space");
    std::vector<uint32_t> z(static_cast<size_t>(hd), 0);
    const FMatrix& b = red.basis();
    for (size_t r = 0; r < red.pivots().size(); ++r) {
        Index piv = red.pivots()[r];
        if (piv < hd)
            z[static_cast<size_t>(piv)] =
                static_cast<uint32_t>(b(static_cast<Index>(r), w - 1).value());
    }
    return z;
}

void cmd_bracket_table(const Algebra& a, bool pretty) {
    HH1 h = hh1(a);
    const Index hd = h.dim();
    json table = json::array();
    std::ostringstream os;
    os << "outer classes: " << hd << "\n";
    for (Index i = 0; i < hd; ++i) {
        json line = json::array();
        for (Index j = 0; j < hd; ++j) {
            FMatrix br = bracket(h.reps[static_cast<size_t>(i)], h.reps[static_cast<size_t>(j)]);
            std::vector<uint32_t> coeffs = class_coordinates(a, h, br);
            line.push_back(coeffs);
            os << "  [D" << i << ",D" << j << "] =";
            bool any = false;
            for (Index t = 0; t < hd; ++t)
                if (coeffs[static_cast<size_t>(t)] != 0) {
                    os << " " << coeffs[static_cast<size_t>(t)] << "*D" << t;
                    any = true;
                }
            if (!any) os << " 0";
            os << "\n";
        }
        table.push_back(std::move(line));
    }
    json results{{"hh1_dim", hd}, {"table", std::move(table)}};
    emit("bracket-table", algebra_json(a), results, "CERTIFIED", pretty, os.str());
}

void cmd_integrability(const Algebra& a, int order, uint64_t budget, bool exhaustive,
                       bool pretty) {
    LiftOptions opt;
    opt.budget = exhaustive ? budget * 10 : budget;
    if (exhaustive) opt.branch_cap = 4096;
    IntegrabilityReport rep = integrable_report(a, order, opt);

    json classes = json::array();
    std::ostringstream os;
    os << "target order " << rep.target_order << ", outer classes " << rep.h.dim()
       << ", certified span " << rep.certified_dim << "\n";
    for (const ClassIntegrability& c : rep.classes) {
        classes.push_back(json{{"class", c.index},
                               {"status", status_name(c.status)},
                               {"order", c.order},
                               {"nodes", c.nodes},
                               {"provenance", provenance_name(c.status)}});
        os << "  D" << c.index << ": " << status_name(c.status) << " (order " << c.order
           << ", nodes " << c.nodes << ", " << provenance_name(c.status) << ")\n";
    }
    json results{{"target_order", rep.target_order},
                 {"der_dim", rep.h.der.dim()},
                 {"inner_dim", rep.h.inn.dim()},
                 {"hh1_dim", rep.h.dim()},
                 {"certified_dim", rep.certified_dim},
                 {"classes", std::move(classes)}};
    emit("integrability", algebra_json(a), results, weakest_provenance(rep.classes), pretty,
         os.str());
}

void cmd_solvability(const Algebra& a, int order, uint64_t budget, bool pretty) {
    LiftOptions opt;
    opt.budget = budget;
    IntegrabilityReport rep = integrable_report(a, order, opt);

    json series = nullptr;
    std::string verdict = "UNKNOWN";
    std::string provenance = "UNDECIDED";
    bool closed = true;
    std::vector<Index> dims;
    try {
        dims = derived_series_dims(rep.certified);
        series = dims;
        verdict = dims.back() == 0 ? "SOLVABLE" : "NOT SOLVABLE";
        provenance = "CERTIFIED";
    } catch (const NotBracketClosedError&) {
        closed = false;
    }

    json results{{"certified_dim", rep.certified_dim},
                 {"bracket_closed", closed},
                 {"derived_series", series},
                 {"verdict", verdict}};
    std::ostringstream os;
    os << "certified integrable span: " << rep.certified_dim << " outer classes\n";
    if (closed) {
        os << "derived series:";
        for (Index s : dims) os << " " << s;
        os << "\nverdict: " << verdict << "\n";
    } else {
        os << "certified span is not bracket-closed; verdict: UNKNOWN\n";
    }
    emit("solvability", algebra_json(a), results, provenance, pretty, os.str());
}

void cmd_symgroup(uint32_t p, int nmax, bool pretty) {
    std::vector<int64_t> series = series_coeffs(p, nmax);
    json rows = json::array();
    std::ostringstream os;
    os << "n  formula  series  singular  parts  parts(mult)  agree\n";
    bool all_agree = true;
    for (int n = 0; n <= nmax; ++n) {
        int64_t formula = hh1_dim_sym(n, p);
        int64_t coeff = series[static_cast<size_t>(n)];
        int64_t sing = singular_count(n, p);
        LemmaCounts lc = lemma_counts(n, p);
        bool agree = formula == coeff && lc.without_mult == lc.with_mult;
        all_agree = all_agree && agree;
        rows.push_back(json{{"n", n},
                            {"formula_dim", formula},
                            {"series_coeff", coeff},
                            {"singular", sing},
                            {"parts_without_mult", lc.without_mult},
                            {"parts_with_mult", lc.with_mult},
                            {"agree", agree}});
        os << n << "  " << formula << "  " << coeff << "  " << sing << "  " << lc.without_mult
           << "  " << lc.with_mult << "  " << (agree ? "yes" : "NO") << "\n";
    }
    json results{{"p", p}, {"nmax", nmax}, {"all_agree", all_agree}, {"rows", std::move(rows)}};
    emit("symgroup", nullptr, results, "CERTIFIED", pretty, os.str());
}

int cmd_selftest(bool negative_control, bool pretty) {
    SelftestOptions opt;
    opt.negative_control = negative_control;
    std::vector<SelftestItem> items = run_selftest(opt);
    json rows = json::array();
    std::ostringstream os;
    for (const SelftestItem& it : items) {
        rows.push_back(
            json{{"id", it.id}, {"name", it.name}, {"pass", it.pass}, {"details", it.details}});
        os << (it.pass ? "PASS" : "FAIL") << " " << it.id << " " << it.name << " | " << it.details
           << "\n";
    }
    bool ok = all_pass(items);
    os << (ok ? "all items passed\n" : "FAILURES present\n");
    json results{{"all_pass", ok}, {"items", std::move(rows)}};
    emit("selftest", nullptr, results, ok ? "CERTIFIED" : "UNDECIDED", pretty, os.str());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact derivation Lie algebras, first Hochschild cohomology, and"
                 " integrability certificates over prime fields"};
    app.require_subcommand(1);

    bool json_out = false;
    bool pretty = false;
    app.add_flag("--json", json_out, "structured JSON output (default)");
    app.add_flag("--pretty", pretty, "human-readable tables instead of JSON");

    AlgebraFlags f_algebra, f_hh1, f_bracket, f_integrability, f_solvability;
    int order = -1;
    uint64_t budget = 1'000'000;
    bool exhaustive = false;
    uint32_t sym_p = 0;
    int nmax = 10;
    bool negative_control = false;

    CLI::App* c_algebra = app.add_subcommand("algebra", "validate and fingerprint an algebra");
    add_algebra_flags(c_algebra, f_algebra);
    CLI::App* c_hh1 = app.add_subcommand("hh1", "derivation, inner, and outer-class dimensions");
    add_algebra_flags(c_hh1, f_hh1);
    CLI::App* c_bracket =
        app.add_subcommand("bracket-table", "Lie brackets of the outer-class representatives");
    add_algebra_flags(c_bracket, f_bracket);
    CLI::App* c_integrability =
        app.add_subcommand("integrability", "per-class integrability verdicts with provenance");
    add_algebra_flags(c_integrability, f_integrability);
    c_integrability->add_option("--order", order, "lift target order (default 2p^2)");
    c_integrability->add_option("--budget", budget, "search budget in linear solves");
    c_integrability->add_flag("--exhaustive", exhaustive,
                              "raise search caps tenfold so refutations can complete");
    CLI::App* c_solvability = app.add_subcommand(
        "solvability", "derived series of the certified-integrable span with verdict");
    add_algebra_flags(c_solvability, f_solvability);
    c_solvability->add_option("--order", order, "lift target order (default 2p^2)");
    c_solvability->add_option("--budget", budget, "search budget in linear solves");
    CLI::App* c_symgroup = app.add_subcommand(
        "symgroup", "symmetric-group outer-class dimension table by partition statistics");
    c_symgroup->add_option("--p", sym_p, "prime modulus")->required();
    c_symgroup->add_option("--nmax", nmax, "largest symmetric-group degree tabulated");
    CLI::App* c_selftest =
        app.add_subcommand("selftest", "run the built-in verification suite");
    c_selftest->add_flag("--negative-control", negative_control,
                         "inject a corrupted tensor; the validation item must fail");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // Phase 1: construct the requested algebra. Failures here are input
    // errors (exit 2): unreadable files, parse errors, invalid presets,
    // non-associative tensors.
    std::optional<Algebra> alg;
    try {
        if (c_algebra->parsed()) alg = build_algebra(f_algebra);
        if (c_hh1->parsed()) alg = build_algebra(f_hh1);
        if (c_bracket->parsed()) alg = build_algebra(f_bracket);
        if (c_integrability->parsed()) alg = build_algebra(f_integrability);
        if (c_solvability->parsed()) alg = build_algebra(f_solvability);
        if (c_symgroup->parsed() && (sym_p < 2 || !is_prime(sym_p)))
            throw Error("--p must be prime");
    } catch (const std::exception& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    }

    // Phase 2: compute and report. Failures here are computation errors
    // (exit 1).
    try {
        if (c_algebra->parsed()) cmd_algebra(*alg, pretty);
        if (c_hh1->parsed()) cmd_hh1(*alg, pretty);
        if (c_bracket->parsed()) cmd_bracket_table(*alg, pretty);
        if (c_integrability->parsed()) cmd_integrability(*alg, order, budget, exhaustive, pretty);
        if (c_solvability->parsed()) cmd_solvability(*alg, order, budget, pretty);
        if (c_symgroup->parsed()) cmd_symgroup(sym_p, nmax, pretty);
        if (c_selftest->parsed()) return cmd_selftest(negative_control, pretty);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
