#include "orbifold/audit.hpp"

#include "orbifold/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orbifold {

std::string to_string(AuditStatus s)
{
    switch (s) {
    case AuditStatus::Consistent: return "consistent";
    case AuditStatus::Discrepant: return "discrepant";
    case AuditStatus::NotApplicable: return "not-applicable";
    }
    return "not-applicable";
}

const StatusEntry& AuditReport::status(const std::string& statement, const std::string& reading) const
{
    for (const auto& e : statuses)
        if (e.statement == statement && e.reading == reading)
            return e;
    throw std::out_of_range("no audit status " + statement + "/" + reading);
}

std::optional<int> kummer_order(const MonodromyDatum& M)
{
    if (M.base_genus() != 0 || !M.handles().empty() || M.branch_cycles().size() != 2)
        return std::nullopt;
    const int d = M.degree();
    bool seen0 = false, seen_inf = false;
    for (const auto& bc : M.branch_cycles()) {
        if (bc.sigma.cycle_type() != std::vector<int>{d})
            return std::nullopt;
        seen0 = seen0 || bc.point == kZero;
        seen_inf = seen_inf || bc.point == kInfinity;
    }
    if (!seen0 || !seen_inf)
        return std::nullopt;
    return d;
}

MonodromyDatum kummer_datum(int m, int characteristic)
{
    std::vector<int> images(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        images[static_cast<std::size_t>(i)] = (i + 1) % m;
    const Permutation sigma(images);
    return MonodromyDatum::create(0, m, characteristic, {},
                                  {{kZero, sigma}, {kInfinity, sigma.inverse()}});
}

std::vector<std::string> builtin_audit_ids()
{
    return {"kummer2-halfweights", "kummer2-trivialP", "kummer2-same", "kummer3-weights"};
}

AuditCase builtin_audit_case(const std::string& id, int characteristic)
{
    const CurveTag X{"X", 0, characteristic};
    auto make = [&](int m, std::map<PointLabel, int> orders, std::map<PointLabel, std::int64_t> l,
                    std::map<PointLabel, std::int64_t> r) {
        TameBranchData P(X, std::move(orders));
        OrbifoldCurve XP(P);
        return AuditCase{id, kummer_datum(m, characteristic), P, OrbDivisor(XP, std::move(l)),
                         OrbDivisor(XP, std::move(r))};
    };
    if (id == "kummer2-halfweights")
        return make(2, {{kZero, 2}, {kInfinity, 2}}, {{kZero, 1}}, {{kInfinity, 1}});
    if (id == "kummer2-trivialP")
        return make(2, {}, {{"p", 1}}, {{"q", 1}});
    if (id == "kummer2-same")
        return make(2, {{kZero, 2}, {kInfinity, 2}}, {{kZero, 1}}, {{kZero, 1}});
    if (id == "kummer3-weights")
        return make(3, {{kZero, 3}, {kInfinity, 3}}, {{kZero, 1}}, {{kInfinity, 1}});
    throw SchemaError("unknown builtin audit case '" + id + "'");
}

namespace {

PushforwardFlavour probe_flavour(const std::vector<OrbLineClass>& pieces,
                                 const RamificationProfile& f, const TameBranchData& fP,
                                 const OrbLineClass& F)
{
    PushforwardFlavour out;
    for (const auto& piece : pieces)
        out.degrees.push_back(piece.total_degree());
    // piece 0 is the structure sheaf; the rest is the quotient by O.
    std::vector<OrbLineClass> quotient(pieces.begin() + 1, pieces.end());
    for (const auto& q : quotient)
        out.pulled_back.push_back(pullback_class(q, f, fP).total_degree());
    out.quotient_mu_max = mu_max(tensor_line(OrbBundle(quotient), F));
    return out;
}

void add(AuditReport& r, std::string statement, std::string reading, AuditStatus s,
         std::string note = {})
{
    r.statuses.push_back(StatusEntry{std::move(statement), std::move(reading), s, std::move(note)});
}

AuditStatus verdict(bool holds)
{
    return holds ? AuditStatus::Consistent : AuditStatus::Discrepant;
}

} // namespace

AuditReport run_audit(const AuditCase& c)
{
    const MonodromyDatum& cover = c.cover;
    if (!is_connected(cover))
        throw InvariantError("audit needs a connected cover");
    if (cover.base_genus() != 0)
        throw InvariantError("audit needs a genus 0 base");

    const RamificationProfile f = ramification_profile_of(cover);
    if (!(c.P.curve() == f.target()))
        throw InvariantError("branch data lives on '" + c.P.curve().name +
                             "', not on the target of the cover");
    const OrbifoldCurve XP(c.P);
    if (!(c.L.ambient() == XP) || !(c.M.ambient() == XP))
        throw InvariantError("audit objects must live on (X,P)");

    AuditReport r;
    r.id = c.id;
    r.degree = cover.degree();
    r.group_order = group_order(cover);
    r.galois = is_galois(cover);
    r.genuinely_ramified = is_genuinely_ramified(cover);
    r.etale_degree = max_etale_subcover(cover).degree;
    r.source_genus = f.source().genus;
    r.kummer_m = kummer_order(cover);
    r.branch_of_cover = branch_data_of_cover(f);
    r.pulled_back_branch = pullback_branch_data(f, c.P);
    r.P_geq_Bf = branch_data_leq(r.branch_of_cover, c.P);
    r.P_leq_Bf = branch_data_leq(c.P, r.branch_of_cover);

    r.L = class_of(c.L);
    r.M = class_of(c.M);
    r.slope_L = slope_P(r.L);
    r.slope_M = slope_P(r.M);
    r.equal_slopes = r.slope_L == r.slope_M;

    r.hom_orbifold = hom_dim(r.L, r.M);

    const bool source_rational = r.source_genus == 0;
    if (source_rational) {
        const auto fL = pullback_class(r.L, f, r.pulled_back_branch);
        const auto fM = pullback_class(r.M, f, r.pulled_back_branch);
        r.hom_plain_pullback = hom_dim(fL, fM);
    } else {
        r.notes.push_back("source has genus " + std::to_string(r.source_genus) +
                          "; classes upstairs are not decided");
    }

    if (r.kummer_m) {
        const CyclicCoverSpec spec{*r.kummer_m, cover.characteristic()};
        if (r.P_leq_Bf) {
            const auto TL = T_pullback(iota_pullback(r.L, r.branch_of_cover), spec);
            const auto TM = T_pullback(iota_pullback(r.M, r.branch_of_cover), spec);
            r.hom_equivariant = hom_dim_equivariant(TL, TM);
        } else {
            r.notes.push_back("P is not <= B_f; no equivariant reading");
        }

        const auto pieces = pushforward_structure(spec);
        if (r.P_geq_Bf) {
            std::vector<OrbLineClass> onP;
            for (const auto& piece : pieces)
                onP.push_back(iota_pullback(piece, c.P));
            r.stack = probe_flavour(onP, f, r.pulled_back_branch, r.M);
        } else {
            r.notes.push_back("P is not >= B_f; stack-flavoured pushforward unavailable");
        }

        const OrbifoldCurve bare(TameBranchData(f.target(), {}));
        std::vector<OrbLineClass> floors;
        for (const auto& piece : pieces) {
            const auto coarse = floor_view(piece).coarse_degree;
            const OrbLineClass on_X(bare, {}, Rational(coarse));
            floors.push_back(iota_pullback(on_X, c.P));
        }
        r.coarse = probe_flavour(floors, f, r.pulled_back_branch, r.M);
    } else {
        r.notes.push_back("not a Kummer cover; pushforward and equivariant readings unavailable");
    }

    const bool galois_gr = r.galois && r.genuinely_ramified;

    for (const auto& [name, flavour] :
         {std::pair{"stack", &r.stack}, std::pair{"coarse", &r.coarse}}) {
        if (!galois_gr || !*flavour) {
            add(r, "quotient_negative_degree", name, AuditStatus::NotApplicable);
            add(r, "quotient_slope_bound", name, AuditStatus::NotApplicable);
            continue;
        }
        const auto& fl = **flavour;
        const bool negative = std::all_of(fl.pulled_back.begin(), fl.pulled_back.end(),
                                          [](const Rational& d) { return d < 0; });
        add(r, "quotient_negative_degree", name, verdict(negative));
        add(r, "quotient_slope_bound", name, verdict(fl.quotient_mu_max < r.slope_M),
            "mu_max " + to_string(fl.quotient_mu_max) + " vs mu(M) " + to_string(r.slope_M));
    }

    if (r.hom_plain_pullback)
        add(r, "hom_inclusion", "", verdict(r.hom_orbifold <= *r.hom_plain_pullback));
    else
        add(r, "hom_inclusion", "", AuditStatus::NotApplicable);

    const bool equality_hyp = galois_gr && r.equal_slopes;
    if (equality_hyp && r.hom_plain_pullback)
        add(r, "hom_equality", "plain", verdict(*r.hom_plain_pullback == r.hom_orbifold));
    else
        add(r, "hom_equality", "plain", AuditStatus::NotApplicable);
    if (equality_hyp && r.hom_equivariant)
        add(r, "hom_equality", "equivariant", verdict(*r.hom_equivariant == r.hom_orbifold));
    else
        add(r, "hom_equality", "equivariant", AuditStatus::NotApplicable);

    if (r.genuinely_ramified && source_rational) {
        const OrbBundle pulled({pullback_class(r.L, f, r.pulled_back_branch)});
        add(r, "stable_pullback", "", verdict(is_stable(pulled)));
    } else {
        add(r, "stable_pullback", "", AuditStatus::NotApplicable);
    }

    add(r, "converse", "", AuditStatus::NotApplicable,
        "needs a stable bundle of rank >= 2 with unstable pullback; rank 1 cannot witness it");

    if (r.hom_plain_pullback && *r.hom_plain_pullback != r.hom_orbifold)
        r.notes.push_back("plain Hom of pullbacks (" + std::to_string(*r.hom_plain_pullback) +
                          ") differs from Hom over (X,P) (" + std::to_string(r.hom_orbifold) + ")");
    if (r.hom_equivariant && *r.hom_equivariant == r.hom_orbifold)
        r.notes.push_back("equivariant Hom agrees with Hom over (X,P)");
    return r;
}

} // namespace orbifold
