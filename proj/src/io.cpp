#include "orbifold/io.hpp"

#include "orbifold/errors.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace orbifold {

namespace {

std::string where(const char* key)
{
    return std::string("'") + key + "'";
}

const Json& need(const Json& doc, const char* key)
{
    if (!doc.is_object())
        throw SchemaError("expected a JSON object holding " + where(key));
    const auto it = doc.find(key);
    if (it == doc.end())
        throw SchemaError("missing key " + where(key));
    return *it;
}

const Json* maybe(const Json& doc, const char* key)
{
    if (!doc.is_object())
        throw SchemaError("expected a JSON object");
    const auto it = doc.find(key);
    return it == doc.end() || it->is_null() ? nullptr : &*it;
}

std::int64_t as_i64(const Json& v, const std::string& what)
{
    if (!v.is_number_integer())
        throw SchemaError(what + " must be an integer");
    return v.get<std::int64_t>();
}

int as_int(const Json& v, const std::string& what)
{
    const auto x = as_i64(v, what);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw SchemaError(what + " is out of range");
    return static_cast<int>(x);
}

std::string as_string(const Json& v, const std::string& what)
{
    if (!v.is_string())
        throw SchemaError(what + " must be a string");
    return v.get<std::string>();
}

const Json& as_object(const Json& v, const std::string& what)
{
    if (!v.is_object())
        throw SchemaError(what + " must be an object");
    return v;
}

const Json& as_array(const Json& v, const std::string& what)
{
    if (!v.is_array())
        throw SchemaError(what + " must be an array");
    return v;
}

Rational as_rational(const Json& v, const std::string& what)
{
    if (v.is_number_integer())
        return Rational(v.get<std::int64_t>());
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    throw SchemaError(what + " must be an integer or a \"p/q\" string");
}

Permutation parse_perm(const Json& v, int degree, const std::string& what)
{
    if (v.is_string())
        return Permutation::parse_cycles(v.get<std::string>(), degree);
    if (v.is_array()) {
        Permutation p = Permutation::identity(degree);
        for (const auto& part : v)
            p = p * Permutation::parse_cycles(as_string(part, what), degree);
        return p;
    }
    throw SchemaError(what + " must be a cycle string or a list of them");
}

std::map<PointLabel, std::int64_t> int_map(const Json& v, const std::string& what)
{
    std::map<PointLabel, std::int64_t> out;
    for (const auto& [k, x] : as_object(v, what).items())
        out[k] = as_i64(x, what + "[" + k + "]");
    return out;
}

} // namespace

Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("'" + path + "': " + e.what());
    }
}

int ParseContext::resolve(const Json& doc, const char* key) const
{
    const Json* v = maybe(doc, key);
    if (!v)
        return characteristic.value_or(0);
    const int stated = as_int(*v, key);
    if (characteristic && *characteristic != stated)
        throw SchemaError("document characteristic " + std::to_string(stated) +
                          " conflicts with --char " + std::to_string(*characteristic));
    return stated;
}

Json rational_json(const Rational& r)
{
    return to_string(r);
}

// ---- branch data ---------------------------------------------------------

TameBranchData parse_branch_data(const Json& doc, const ParseContext& ctx)
{
    CurveTag curve;
    curve.name = as_string(need(doc, "curve"), "curve");
    if (const Json* g = maybe(doc, "genus"))
        curve.genus = as_int(*g, "genus");
    curve.characteristic = ctx.resolve(doc);
    validate(curve);
    std::map<PointLabel, int> orders;
    for (const auto& [x, n] : as_object(need(doc, "orders"), "orders").items())
        orders[x] = as_int(n, "orders[" + x + "]");
    return TameBranchData(curve, std::move(orders));
}

Json to_json(const TameBranchData& P)
{
    Json orders = Json::object();
    for (const auto& [x, n] : P.orders())
        orders[x] = n;
    return Json{{"curve", P.curve().name},
                {"genus", P.curve().genus},
                {"characteristic", P.curve().characteristic},
                {"orders", orders}};
}

// ---- profiles --------------------------------------------------------------

RamificationProfile parse_profile(const Json& doc, const ParseContext& ctx)
{
    CurveTag target{"X", 0, ctx.resolve(doc)};
    if (const Json* g = maybe(doc, "target_genus"))
        target.genus = as_int(*g, "target_genus");
    const int degree = as_int(need(doc, "degree"), "degree");
    const Json& galois = need(doc, "galois");
    if (!galois.is_boolean())
        throw SchemaError("'galois' must be a boolean");
    std::optional<int> source_genus;
    if (const Json* g = maybe(doc, "source_genus"))
        source_genus = as_int(*g, "source_genus");
    FiberMap fibers;
    for (const auto& [x, part] : as_object(need(doc, "fibers"), "fibers").items()) {
        Partition p;
        for (const auto& e : as_array(part, "fibers[" + x + "]"))
            p.push_back(as_int(e, "ramification index"));
        fibers[x] = std::move(p);
    }
    return RamificationProfile::create(target, degree, std::move(fibers), galois.get<bool>(),
                                       source_genus);
}

Json to_json(const RamificationProfile& f)
{
    Json fibers = Json::object();
    for (const auto& [x, part] : f.fibers())
        fibers[x] = part;
    return Json{{"source_genus", f.source().genus},
                {"target_genus", f.target().genus},
                {"characteristic", f.target().characteristic},
                {"degree", f.degree()},
                {"galois", f.galois()},
                {"fibers", fibers}};
}

// ---- monodromy -------------------------------------------------------------

MonodromyDatum parse_monodromy(const Json& doc, const ParseContext& ctx)
{
    int genus = 0;
    if (const Json* g = maybe(doc, "base_genus"))
        genus = as_int(*g, "base_genus");
    const int degree = as_int(need(doc, "degree"), "degree");
    if (degree < 1)
        throw SchemaError("'degree' must be positive");
    const int characteristic = ctx.resolve(doc);

    std::vector<std::pair<Permutation, Permutation>> handles;
    if (const Json* h = maybe(doc, "handles")) {
        for (const auto& pair : as_array(*h, "handles")) {
            if (!pair.is_array() || pair.size() != 2)
                throw SchemaError("each handle must be a pair [alpha, beta]");
            handles.emplace_back(parse_perm(pair[0], degree, "handle"),
                                 parse_perm(pair[1], degree, "handle"));
        }
    }
    std::vector<BranchCycle> cycles;
    for (const auto& [x, v] : as_object(need(doc, "branch_cycles"), "branch_cycles").items())
        cycles.push_back(BranchCycle{x, parse_perm(v, degree, "branch_cycles[" + x + "]")});
    return MonodromyDatum::create(genus, degree, characteristic, std::move(handles),
                                  std::move(cycles));
}

Json to_json(const MonodromyDatum& M)
{
    Json handles = Json::array();
    for (const auto& [a, b] : M.handles())
        handles.push_back(Json::array({a.to_cycles(), b.to_cycles()}));
    Json cycles = Json::object();
    for (const auto& bc : M.branch_cycles())
        cycles[bc.point] = bc.sigma.to_cycles();
    return Json{{"base_genus", M.base_genus()},
                {"degree", M.degree()},
                {"characteristic", M.characteristic()},
                {"handles", handles},
                {"branch_cycles", cycles}};
}

CoverDoc parse_cover(const Json& doc, const ParseContext& ctx)
{
    if (!doc.is_object())
        throw SchemaError("cover document must be an object");
    if (doc.contains("fibers"))
        return parse_profile(doc, ctx);
    if (doc.contains("branch_cycles"))
        return parse_monodromy(doc, ctx);
    throw SchemaError("cover document needs 'fibers' (profile) or 'branch_cycles' (monodromy)");
}

RamificationProfile profile_of(const CoverDoc& cover)
{
    if (const auto* f = std::get_if<RamificationProfile>(&cover))
        return *f;
    return ramification_profile_of(std::get<MonodromyDatum>(cover));
}

// ---- divisors and classes --------------------------------------------------

OrbDivisor parse_divisor(const Json& doc, const OrbifoldCurve& ambient)
{
    return OrbDivisor(ambient, int_map(need(doc, "coefficients"), "coefficients"));
}

Json to_json(const OrbDivisor& D)
{
    Json c = Json::object();
    for (const auto& [x, k] : D.coefficients())
        c[x] = k;
    return Json{{"coefficients", c}};
}

OrbLineClass parse_class(const Json& doc, const OrbifoldCurve& ambient)
{
    if (!doc.is_object())
        throw SchemaError("class document must be an object");
    if (doc.contains("coefficients"))
        return class_of(parse_divisor(doc, ambient));
    std::map<PointLabel, std::int64_t> residues;
    if (const Json* r = maybe(doc, "residues")) {
        for (const auto& [x, v] : as_object(*r, "residues").items()) {
            if (!v.is_array() || v.size() != 2)
                throw SchemaError("residues[" + x + "] must be [r, n]");
            const auto n = as_i64(v[1], "residue order");
            if (n != ambient.order(x))
                throw InvariantError("residue at '" + x + "' is stated mod " + std::to_string(n) +
                                     " but the order there is " +
                                     std::to_string(ambient.order(x)));
            residues[x] = as_i64(v[0], "residue");
        }
    }
    return OrbLineClass(ambient, std::move(residues), as_rational(need(doc, "degree"), "degree"));
}

Json to_json(const OrbLineClass& L)
{
    Json res = Json::object();
    for (const auto& [x, r] : L.residues())
        res[x] = Json::array({r, L.ambient().order(x)});
    return Json{{"residues", res}, {"degree", rational_json(L.total_degree())}};
}

OrbBundle parse_bundle(const Json& doc, const OrbifoldCurve& ambient)
{
    std::vector<OrbLineClass> summands;
    for (const auto& s : as_array(need(doc, "summands"), "summands"))
        summands.push_back(parse_class(s, ambient));
    if (summands.empty())
        throw SchemaError("'summands' must not be empty");
    return OrbBundle(std::move(summands));
}

Json to_json(const OrbBundle& E)
{
    Json s = Json::array();
    for (const auto& L : E.summands())
        s.push_back(to_json(L));
    return Json{{"summands", s}};
}

Json to_json(const HNReport& hn)
{
    Json out = Json::array();
    for (const auto& st : hn)
        out.push_back(Json{{"slope", rational_json(st.slope)}, {"summands", st.indices}});
    return out;
}

// ---- equivariant -----------------------------------------------------------

EqLineBundle parse_eq_line_bundle(const Json& doc, const ParseContext& ctx)
{
    const CyclicCoverSpec spec{as_int(need(doc, "m"), "m"), ctx.resolve(doc)};
    const auto a = as_i64(need(doc, "a"), "a");
    const auto b = as_i64(need(doc, "b"), "b");
    std::map<PointLabel, std::int64_t> orbits;
    if (const Json* o = maybe(doc, "orbits"))
        orbits = int_map(*o, "orbits");
    const auto c = as_i64(need(doc, "character"), "character");
    return EqLineBundle(spec, a, b, std::move(orbits), c);
}

Json to_json(const EqLineBundle& L)
{
    Json orbits = Json::object();
    for (const auto& [p, k] : L.orbits())
        orbits[p] = k;
    return Json{{"m", L.spec().m},
                {"a", L.a()},
                {"b", L.b()},
                {"orbits", orbits},
                {"character", L.character()}};
}

// ---- audit -----------------------------------------------------------------

AuditCase parse_audit_case(const Json& doc, const ParseContext& ctx)
{
    AuditCase c;
    c.id = as_string(need(doc, "id"), "id");
    c.cover = parse_monodromy(need(doc, "cover"), ctx);
    Json branch = need(doc, "branch");
    if (branch.is_object() && !branch.contains("genus"))
        branch["genus"] = c.cover.base_genus();
    c.P = parse_branch_data(branch, ctx);
    const OrbifoldCurve XP(c.P);
    c.L = parse_divisor(need(doc, "L"), XP);
    c.M = parse_divisor(need(doc, "M"), XP);
    return c;
}

namespace {

Json rationals(const std::vector<Rational>& v)
{
    Json out = Json::array();
    for (const auto& r : v)
        out.push_back(rational_json(r));
    return out;
}

Json flavour_json(const std::optional<PushforwardFlavour>& f)
{
    if (!f)
        return nullptr;
    return Json{{"degrees", rationals(f->degrees)},
                {"quotient_pullback_degrees", rationals(f->pulled_back)},
                {"quotient_mu_max", rational_json(f->quotient_mu_max)}};
}

template <class T>
Json opt(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json to_json(const AuditReport& r)
{
    Json hyp{{"degree", r.degree},
             {"group_order", r.group_order},
             {"galois", r.galois},
             {"genuinely_ramified", r.genuinely_ramified},
             {"max_etale_degree", r.etale_degree},
             {"source_genus", r.source_genus},
             {"kummer_m", opt(r.kummer_m)},
             {"B_f", to_json(r.branch_of_cover)["orders"]},
             {"f*P", to_json(r.pulled_back_branch)["orders"]},
             {"P>=B_f", r.P_geq_Bf},
             {"P<=B_f", r.P_leq_Bf}};
    Json objects{{"L", to_json(r.L)},
                 {"M", to_json(r.M)},
                 {"slope_L", rational_json(r.slope_L)},
                 {"slope_M", rational_json(r.slope_M)},
                 {"equal_slopes", r.equal_slopes}};
    Json hom{{"orbifold", r.hom_orbifold},
             {"equivariant", opt(r.hom_equivariant)},
             {"plain_pullback", opt(r.hom_plain_pullback)}};
    Json status = Json::object();
    for (const auto& e : r.statuses) {
        const std::string tag = to_string(e.status);
        if (e.reading.empty())
            status[e.statement] = tag;
        else
            status[e.statement][e.reading] = tag;
    }
    Json notes = Json::array();
    for (const auto& e : r.statuses)
        if (!e.note.empty())
            notes.push_back(e.statement + (e.reading.empty() ? "" : "/" + e.reading) + ": " + e.note);
    for (const auto& n : r.notes)
        notes.push_back(n);
    return Json{{"id", r.id},
                {"hypotheses", hyp},
                {"objects", objects},
                {"hom", hom},
                {"pushforward", Json{{"stack", flavour_json(r.stack)},
                                     {"coarse", flavour_json(r.coarse)}}},
                {"status", status},
                {"notes", notes}};
}

} // namespace orbifold
