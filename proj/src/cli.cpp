#include "orbifold/cli.hpp"

#include "orbifold/errors.hpp"
#include "orbifold/io.hpp"
#include "orbifold/properties.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace orbifold {

namespace {

struct Globals {
    std::uint64_t seed = 1;
    std::uint64_t scale = 1;
    bool json = false;
    std::optional<int> characteristic;

    ParseContext ctx() const { return ParseContext{characteristic}; }
};

std::string scalar_text(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

bool is_flat(const Json& v)
{
    if (v.is_object())
        return false;
    if (v.is_array())
        return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
    return true;
}

void print_human(const Json& doc, std::ostream& out, int indent = 0)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [k, v] : doc.items()) {
        if (v.is_array() && is_flat(v)) {
            out << pad << k << ": [";
            for (std::size_t i = 0; i < v.size(); ++i)
                out << (i ? ", " : "") << scalar_text(v[i]);
            out << "]\n";
        } else if (v.is_object() && !v.empty()) {
            out << pad << k << ":\n";
            print_human(v, out, indent + 2);
        } else if (v.is_array()) {
            out << pad << k << ":\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i].is_object()) {
                    out << pad << "  -\n";
                    print_human(v[i], out, indent + 4);
                } else {
                    out << pad << "  - " << (is_flat(v[i]) ? scalar_text(v[i]) : v[i].dump()) << '\n';
                }
            }
        } else {
            out << pad << k << ": " << (v.is_object() ? "{}" : scalar_text(v)) << '\n';
        }
    }
}

void emit(const Globals& g, const Json& doc, std::ostream& out)
{
    if (g.json)
        out << doc.dump(2) << '\n';
    else
        print_human(doc, out);
}

Json orbits_json(const std::vector<std::vector<int>>& orbits)
{
    Json out = Json::array();
    for (const auto& o : orbits) {
        Json one = Json::array();
        for (int v : o)
            one.push_back(v + 1);
        out.push_back(one);
    }
    return out;
}

/// Branch data on the target of f; a document without "genus" inherits it.
TameBranchData branch_for(const Json& doc, const RamificationProfile& f, const ParseContext& ctx)
{
    Json copy = doc;
    if (copy.is_object() && !copy.contains("genus"))
        copy["genus"] = f.target().genus;
    if (copy.is_object() && !copy.contains("characteristic") && !ctx.characteristic)
        copy["characteristic"] = f.target().characteristic;
    return parse_branch_data(copy, ctx);
}

// ---- cover -----------------------------------------------------------------

int cmd_cover(const Globals& g, const std::string& path, std::ostream& out)
{
    const auto M = parse_monodromy(load_json_file(path), g.ctx());
    if (!is_connected(M))
        throw InvariantError("monodromy group is not transitive: the cover is disconnected");
    const auto f = ramification_profile_of(M);
    const auto sub = max_etale_subcover(M);
    Json report{{"degree", M.degree()},
                {"base_genus", M.base_genus()},
                {"connected", true},
                {"group_order", group_order(M)},
                {"galois", is_galois(M)},
                {"profile", to_json(f)},
                {"source_genus", f.source().genus},
                {"branch_data_of_cover", to_json(branch_data_of_cover(f))["orders"]},
                {"normal_closure_orbits", orbits_json(normal_closure_orbits(M))},
                {"genuinely_ramified", is_genuinely_ramified(M)},
                {"max_etale_degree", sub.degree}};
    emit(g, report, out);
    return kExitOk;
}

// ---- branch ----------------------------------------------------------------

int cmd_branch(const Globals& g, const std::string& cover_path, const std::string& branch_path,
               std::ostream& out)
{
    const auto cover = parse_cover(load_json_file(cover_path), g.ctx());
    if (const auto* M = std::get_if<MonodromyDatum>(&cover); M && !is_connected(*M))
        throw InvariantError("monodromy group is not transitive: the cover is disconnected");
    const auto f = profile_of(cover);
    const TameBranchData P = branch_path.empty()
                                 ? TameBranchData(f.target(), {})
                                 : branch_for(load_json_file(branch_path), f, g.ctx());
    if (!(P.curve() == f.target()))
        throw InvariantError("branch data lives on '" + P.curve().name + "' (genus " +
                             std::to_string(P.curve().genus) + "), not on the target X of the cover");
    const auto fP = pullback_branch_data(f, P);
    Json report{{"degree", f.degree()},
                {"source_genus", f.source().genus},
                {"P", to_json(P)["orders"]},
                {"f*P", to_json(fP)["orders"]},
                {"B_f", to_json(branch_data_of_cover(f))["orders"]},
                {"P>=B_f", branch_data_leq(branch_data_of_cover(f), P)},
                {"essentially_etale", is_essentially_etale(f, P)},
                {"etale_over_f*P", is_etale_morphism(f, fP, P)}};
    if (f.galois())
        report["geometric_witness"] = is_geometric_witness(f, P);
    emit(g, report, out);
    return kExitOk;
}

// ---- divisor ---------------------------------------------------------------

int cmd_divisor(const Globals& g, const std::string& branch_path, const std::string& div_path,
                const std::string& cover_path, const std::string& refine_path, std::ostream& out,
                std::ostream& err)
{
    const auto P = parse_branch_data(load_json_file(branch_path), g.ctx());
    const OrbifoldCurve XP(P);
    const auto D = parse_divisor(load_json_file(div_path), XP);
    int code = kExitOk;

    Json report{{"divisor", to_json(D)["coefficients"]}, {"deg_P", rational_json(deg_P(D))}};
    if (P.curve().genus == 0) {
        const auto L = class_of(D);
        const auto fv = floor_view(L);
        Json weights = Json::object();
        for (const auto& [x, w] : fv.weights)
            weights[x] = rational_json(w);
        report["class"] = to_json(L);
        report["coarse_degree"] = fv.coarse_degree;
        report["weights"] = weights;
        report["h0"] = h0(L);
    }
    if (!refine_path.empty()) {
        const auto P2 = parse_branch_data(load_json_file(refine_path), g.ctx());
        const auto moved = iota_pullback(D, P2);
        report["iota_pullback"] = to_json(moved)["coefficients"];
        report["iota_deg"] = rational_json(deg_P(moved));
        if (deg_P(moved) != deg_P(D)) {
            err << "property failure: degree changed under iota\n";
            code = kExitPropertyFailure;
        }
    }
    if (!cover_path.empty()) {
        const auto f = profile_of(parse_cover(load_json_file(cover_path), g.ctx()));
        const auto up = cover_pullback(D, f);
        report["pullback"] = to_json(up)["coefficients"];
        report["f*P"] = to_json(up.ambient().branch_data())["orders"];
        report["pullback_deg"] = rational_json(deg_P(up));
        if (deg_P(up) != Rational(f.degree()) * deg_P(D)) {
            err << "property failure: deg f*D != deg(f) deg D\n";
            code = kExitPropertyFailure;
        }
    }
    emit(g, report, out);
    return code;
}

// ---- bundle ----------------------------------------------------------------

Json bundle_report(const OrbBundle& E)
{
    return Json{{"rank", E.rank()},
                {"deg", rational_json(deg_P(E))},
                {"slope", rational_json(slope_P(E))},
                {"hn", to_json(hn(E))},
                {"mu_max", rational_json(mu_max(E))},
                {"semistable", is_semistable(E)},
                {"polystable", is_polystable(E)},
                {"stable", is_stable(E)},
                {"parabolic_slope", rational_json(parabolic_view(E).parabolic_slope)}};
}

int cmd_bundle(const Globals& g, const std::string& bundle_path, const std::string& branch_path,
               const std::string& cover_path, std::ostream& out, std::ostream& err)
{
    const Json doc = load_json_file(bundle_path);
    TameBranchData P(CurveTag{"X", 0, g.characteristic.value_or(0)}, {});
    if (!branch_path.empty())
        P = parse_branch_data(load_json_file(branch_path), g.ctx());
    else if (doc.is_object() && doc.contains("branch"))
        P = parse_branch_data(doc["branch"], g.ctx());
    const auto E = parse_bundle(doc, OrbifoldCurve(P));

    Json report = bundle_report(E);
    report["summands"] = to_json(E)["summands"];
    int code = kExitOk;
    if (!cover_path.empty()) {
        const auto f = profile_of(parse_cover(load_json_file(cover_path), g.ctx()));
        const auto fP = pullback_branch_data(f, P);
        const auto fE = pullback_bundle(E, f, fP);
        Json pulled = bundle_report(fE);
        pulled["f*P"] = to_json(fP)["orders"];
        pulled["summands"] = to_json(fE)["summands"];
        const bool relation = slope_P(fE) == Rational(f.degree()) * slope_P(E);
        pulled["slope_relation"] = relation;
        report["pullback"] = pulled;
        if (!relation) {
            err << "property failure: slope(f*E) != deg(f) slope(E)\n";
            code = kExitPropertyFailure;
        }
    }
    emit(g, report, out);
    return code;
}

// ---- equiv -----------------------------------------------------------------

int cmd_equiv(const Globals& g, const std::string& path, int structure_m, std::ostream& out,
              std::ostream& err)
{
    if (structure_m > 0) {
        const CyclicCoverSpec spec{structure_m, g.characteristic.value_or(0)};
        Json classes = Json::array();
        Json degrees = Json::array();
        for (const auto& L : pushforward_structure(spec)) {
            classes.push_back(to_json(L));
            degrees.push_back(rational_json(L.total_degree()));
        }
        emit(g, Json{{"m", structure_m}, {"pushforward_structure", classes}, {"degrees", degrees}},
             out);
        return kExitOk;
    }

    const Json doc = load_json_file(path);
    if (!doc.is_object())
        throw SchemaError("equiv document must be an object");
    int code = kExitOk;
    if (doc.contains("class")) {
        const CyclicCoverSpec spec{static_cast<int>(doc.at("m").get<std::int64_t>()),
                                   g.ctx().resolve(doc)};
        const auto L = parse_class(doc["class"], target_orbifold(spec));
        const auto T = T_pullback(L, spec);
        const bool degree_ok = Rational(eq_degree(T)) == Rational(spec.m) * L.total_degree();
        const bool round_trip = S_pushforward(T) == L;
        emit(g,
             Json{{"class", to_json(L)},
                  {"T", to_json(T)},
                  {"eq_degree", eq_degree(T)},
                  {"h0_invariants", h0_invariants(T)},
                  {"h0_class", h0(L)},
                  {"degree_relation", degree_ok},
                  {"round_trip", round_trip}},
             out);
        if (!degree_ok || !round_trip || h0_invariants(T) != h0(L)) {
            err << "property failure in T\n";
            code = kExitPropertyFailure;
        }
        return code;
    }

    const auto W = parse_eq_line_bundle(doc, g.ctx());
    const auto S = S_pushforward(W);
    const auto back = T_pullback(S, W.spec());
    const bool ok = back == canonical(W) && h0_invariants(W) == h0(S);
    emit(g,
         Json{{"bundle", to_json(W)},
              {"eq_degree", eq_degree(W)},
              {"h0_invariants", h0_invariants(W)},
              {"h0_plain", h0_plain(W)},
              {"canonical", to_json(canonical(W))},
              {"S", to_json(S)},
              {"h0_S", h0(S)},
              {"T(S)", to_json(back)}},
         out);
    if (!ok) {
        err << "property failure: T(S(W)) or h0 mismatch\n";
        code = kExitPropertyFailure;
    }
    return code;
}

// ---- audit -----------------------------------------------------------------

int cmd_audit(const Globals& g, const std::string& target, bool list, std::ostream& out)
{
    if (list || target.empty()) {
        Json ids = builtin_audit_ids();
        emit(g, Json{{"builtin", ids}}, out);
        return kExitOk;
    }
    const auto ids = builtin_audit_ids();
    AuditCase c;
    if (std::find(ids.begin(), ids.end(), target) != ids.end())
        c = builtin_audit_case(target, g.characteristic.value_or(0));
    else if (std::filesystem::exists(target))
        c = parse_audit_case(load_json_file(target), g.ctx());
    else
        throw SchemaError("'" + target + "' is neither a builtin audit case nor a file");
    emit(g, to_json(run_audit(c)), out);
    return kExitOk;
}

// ---- selftest --------------------------------------------------------------

int cmd_selftest(const Globals& g, bool inject_fault, std::ostream& out)
{
    SuiteOptions opt{g.seed, inject_fault};
    const auto results = run_all_suites(opt, g.scale);
    std::uint64_t total = 0, failed = 0;
    Json suites = Json::array();
    for (const auto& r : results) {
        total += r.cases;
        failed += r.ok() ? 0 : 1;
        Json s{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}};
        if (!r.ok())
            s["first_failure"] = r.first_failure;
        suites.push_back(s);
    }
    const bool pass = failed == 0;
    if (g.json) {
        out << Json{{"seed", g.seed},
                    {"scale", g.scale},
                    {"total_cases", total},
                    {"failed_suites", failed},
                    {"status", pass ? "pass" : "fail"},
                    {"suites", suites}}
                   .dump(2)
            << '\n';
    } else {
        for (const auto& r : results) {
            out << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
            if (!r.ok())
                out << ": " << r.failures << " failures, first: " << r.first_failure;
            out << '\n';
        }
        out << "selftest " << (pass ? "pass" : "fail") << ": " << total << " cases, " << failed
            << " failed suites, seed " << g.seed << ", scale " << g.scale << '\n';
    }
    return pass ? kExitOk : kExitPropertyFailure;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact calculator for tame formal orbifold curves", "orbifold"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    int char_value = 0;
    app.add_option("--seed", g.seed, "Seed for randomized suites")->capture_default_str();
    app.add_option("--scale", g.scale, "Size multiplier for randomized suites (0 = empty)")
        ->capture_default_str();
    app.add_flag("--json", g.json, "Machine-readable JSON output");
    auto* char_opt = app.add_option("--char", char_value, "Ground field characteristic (0 or a prime)");

    std::string path, second, cover_path, branch_path, refine_path;
    int structure_m = 0;
    bool list = false, inject = false;

    auto* cover = app.add_subcommand("cover", "Report on a monodromy datum");
    cover->add_option("monodromy", path, "Monodromy JSON")->required();

    auto* branch = app.add_subcommand("branch", "Pull branch data back along a cover; report B_f");
    branch->add_option("cover", path, "Monodromy or profile JSON")->required();
    branch->add_option("branch", second, "Branch data JSON on the target (default: empty)");

    auto* divisor = app.add_subcommand("divisor", "Degree, class and floor of a stacky divisor");
    divisor->add_option("branch", path, "Branch data JSON")->required();
    divisor->add_option("divisor", second, "Divisor JSON")->required();
    divisor->add_option("--cover", cover_path, "Also pull back along this cover");
    divisor->add_option("--refine", refine_path, "Also carry along iota to this finer branch data");

    auto* bundle = app.add_subcommand("bundle", "Slopes, HN strata and stability of a bundle");
    bundle->add_option("bundle", path, "Bundle JSON")->required();
    bundle->add_option("--branch", branch_path, "Branch data JSON for the ambient");
    bundle->add_option("--cover", cover_path, "Also pull back along this cover to (Y, f*P)");

    auto* equiv = app.add_subcommand("equiv", "Cyclic equivariant line bundles and T / S");
    equiv->add_option("file", path, "Equivariant line bundle JSON, or {\"m\", \"class\"}");
    equiv->add_option("--structure", structure_m, "Print the pushforward structure for z -> z^m")
        ->check(CLI::Range(2, 1000));

    auto* audit = app.add_subcommand("audit", "Probe the genuine-ramification lemmas on a case");
    audit->add_option("case", path, "Builtin id or audit case JSON");
    audit->add_flag("--list", list, "List builtin cases");

    auto* selftest = app.add_subcommand("selftest", "Run every property suite");
    selftest->add_flag("--inject-fault", inject, "Break one identity on purpose")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitSchema;
    }
    if (char_opt->count() > 0)
        g.characteristic = char_value;

    try {
        if (g.characteristic)
            validate(CurveTag{"X", 0, *g.characteristic});
        if (*cover)
            return cmd_cover(g, path, out);
        if (*branch)
            return cmd_branch(g, path, second, out);
        if (*divisor)
            return cmd_divisor(g, path, second, cover_path, refine_path, out, err);
        if (*bundle)
            return cmd_bundle(g, path, branch_path, cover_path, out, err);
        if (*equiv) {
            if (path.empty() && structure_m == 0)
                throw SchemaError("equiv needs a file or --structure m");
            return cmd_equiv(g, path, structure_m, out, err);
        }
        if (*audit)
            return cmd_audit(g, path, list, out);
        if (*selftest)
            return cmd_selftest(g, inject, out);
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << '\n';
        return kExitSchema;
    } catch (const nlohmann::json::exception& e) {
        err << "schema error: " << e.what() << '\n';
        return kExitSchema;
    } catch (const InvariantError& e) {
        err << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitSchema;
}

} // namespace orbifold
