#include "orbifold/properties.hpp"

#include "orbifold/audit.hpp"
#include "orbifold/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbifold {

void SuiteResult::fail(const std::string& what)
{
    if (failures++ == 0)
        first_failure = what;
}

namespace {

std::string show(const TameBranchData& P)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [x, n] : P.orders()) {
        os << (first ? "" : ", ") << x << ':' << n;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string show(const OrbDivisor& D)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [x, k] : D.coefficients()) {
        os << (first ? "" : " + ") << k << '[' << x << ']';
        first = false;
    }
    if (first)
        os << '0';
    os << " on " << show(D.ambient().branch_data());
    return os.str();
}

std::string show(const OrbLineClass& L)
{
    std::ostringstream os;
    os << "class(";
    for (const auto& [x, r] : L.residues())
        os << x << '=' << r << '/' << L.ambient().order(x) << ' ';
    os << "deg " << to_string(L.total_degree()) << ")";
    return os.str();
}

std::string show(const EqLineBundle& W)
{
    std::ostringstream os;
    os << "(m=" << W.spec().m << ", a=" << W.a() << ", b=" << W.b() << ", orbits=" << W.orbits().size()
       << ", c=" << W.character() << ")";
    return os.str();
}

std::string show(const MonodromyDatum& M)
{
    std::ostringstream os;
    os << "d=" << M.degree() << " g=" << M.base_genus();
    for (const auto& [a, b] : M.handles())
        os << " [" << a.to_cycles() << ',' << b.to_cycles() << ']';
    for (const auto& bc : M.branch_cycles())
        os << ' ' << bc.point << '=' << bc.sigma.to_cycles();
    return os.str();
}

CurveTag random_curve(Rng& rng, int max_genus)
{
    return CurveTag{"X", static_cast<int>(rng.uniform(0, max_genus)), random_characteristic(rng)};
}

// Runs body(i) for i < cases, converting escaped exceptions into failures.
template <class F>
void for_cases(SuiteResult& r, std::uint64_t cases, F&& body)
{
    for (std::uint64_t i = 0; i < cases; ++i) {
        ++r.cases;
        try {
            body(i);
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
    }
}

} // namespace

// ---- orbicore ----------------------------------------------------------------

SuiteResult suite_branch_calculus(const SuiteOptions& opt, std::uint64_t cases)
{
    SuiteResult r{"branch_calculus"};
    Rng rng(opt.seed ^ 0x0b1c0e);
    for_cases(r, cases, [&](std::uint64_t) {
        const CurveTag X = random_curve(rng, 2);
        const int p = X.characteristic;

        int n = 1, e = 1;
        do {
            n = static_cast<int>(rng.uniform(1, 30));
            e = static_cast<int>(rng.uniform(1, 30));
        } while (!is_tame(n, p) || !is_tame(e, p));
        const int t = tame_order_after_pullback(n, e);
        if (n % t != 0 || (t == 1) != (e % n == 0))
            r.fail("tame_order_after_pullback(" + std::to_string(n) + "," + std::to_string(e) +
                   ") = " + std::to_string(t));

        const auto f = random_profile(rng, X, 8);
        const auto P = random_branch_data(rng, X);
        const auto P2 = random_refinement(rng, P);
        if (!branch_data_leq(pullback_branch_data(f, P), pullback_branch_data(f, P2)))
            r.fail("pullback not monotone for " + show(P) + " <= " + show(P2));

        const auto Bf = branch_data_of_cover(f);
        const auto fBf = pullback_branch_data(f, Bf);
        for (const auto& [x, part] : f.fibers()) {
            const int l = std::accumulate(part.begin(), part.end(), 1,
                                          [](int a, int b) { return std::lcm(a, b); });
            for (std::size_t i = 0; i < part.size(); ++i)
                if (fBf.order(preimage_label(f, x, i)) != l / std::gcd(l, part[i]))
                    r.fail("f*B_f closed form at " + preimage_label(f, x, i));
        }

        bool divides = true;
        for (const auto& [x, part] : f.fibers())
            for (int ey : part)
                divides = divides && P.order(x) % ey == 0;
        const bool etale = is_etale_morphism(f, pullback_branch_data(f, P), P);
        if (etale != divides || is_essentially_etale(f, P) != divides)
            r.fail("etale(f, f*P, P) disagrees with e_y | n_x on " + show(P));

        const auto P3 = random_refinement(rng, P2);
        const auto Q = random_branch_data(rng, X);
        if (!branch_data_leq(P, P) || !branch_data_leq(P, P2) || !branch_data_leq(P2, P3) ||
            !branch_data_leq(P, P3))
            r.fail("leq not reflexive/transitive on " + show(P) + ", " + show(P2) + ", " + show(P3));
        if (branch_data_leq(P, Q) && branch_data_leq(Q, P) && !(P == Q))
            r.fail("leq not antisymmetric on " + show(P) + ", " + show(Q));
    });
    return r;
}

SuiteResult suite_degree_multiplicativity(const SuiteOptions& opt, std::uint64_t cases)
{
    SuiteResult r{"degree_multiplicativity"};
    Rng rng(opt.seed ^ 0xde6);
    for_cases(r, cases, [&](std::uint64_t) {
        const CurveTag X = random_curve(rng, 2);
        const auto f = random_profile(rng, X, 8);
        const OrbifoldCurve XP(random_branch_data(rng, X));
        const auto D = random_divisor(rng, XP);
        const Rational up = deg_P(cover_pullback(D, f));
        const int factor = f.degree() + (opt.inject_fault ? 1 : 0);
        const Rational expected = Rational(factor) * deg_P(D);
        if (up != expected)
            r.fail("deg f*D = " + to_string(up) + " but " + std::to_string(f.degree()) +
                   " * deg D = " + to_string(expected) + " for D = " + show(D));
    });
    return r;
}

SuiteResult suite_iota_invariance(const SuiteOptions& opt, std::uint64_t cases)
{
    SuiteResult r{"iota_invariance"};
    Rng rng(opt.seed ^ 0x107a);
    for_cases(r, cases, [&](std::uint64_t) {
        const CurveTag X = random_curve(rng, 2);
        const auto P = random_branch_data(rng, X);
        const auto P2 = random_refinement(rng, P);
        const auto D = random_divisor(rng, OrbifoldCurve(P));
        const auto moved = iota_pullback(D, P2);
        if (deg_P(moved) != deg_P(D))
            r.fail("deg changes under iota to " + show(P2) + " for D = " + show(D));
    });
    return r;
}

// ---- monodromy -------------------------------------------------------------

namespace {

void check_datum(SweepResult& out, const MonodromyDatum& M)
{
    ++out.ramification.cases;
    ++out.etale.cases;
    try {
        const bool fast = is_genuinely_ramified(M);
        const bool slow = oracle_is_genuinely_ramified(M, kDefaultOracleDegree);
        if (fast != slow)
            out.ramification.fail("normal closure says " + std::string(fast ? "true" : "false") +
                                  ", oracle says " + (slow ? "true" : "false") + " for " + show(M));

        const auto profile = ramification_profile_of(M);   // throws if RH fails
        (void)profile;
        if (is_galois(M))
            for (const auto& bc : M.branch_cycles()) {
                const auto ct = bc.sigma.cycle_type();
                if (std::adjacent_find(ct.begin(), ct.end(), std::not_equal_to<>()) != ct.end())
                    out.ramification.fail("Galois datum with unequal cycle lengths: " + show(M));
            }

        const auto blocks = normal_closure_orbits(M);
        const std::size_t size = blocks.front().size();
        for (const auto& b : blocks)
            if (b.size() != size)
                out.etale.fail("N-orbits of unequal size: " + show(M));
        if (blocks.size() * size != static_cast<std::size_t>(M.degree()))
            out.etale.fail("orbit count * size != d: " + show(M));

        std::vector<int> block_of(static_cast<std::size_t>(M.degree()));
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (int v : blocks[b])
                block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
        for (const auto& bc : M.branch_cycles())
            for (int v = 0; v < M.degree(); ++v)
                if (block_of[static_cast<std::size_t>(bc.sigma(v))] != block_of[static_cast<std::size_t>(v)])
                    out.etale.fail("branch cycle moves a block: " + show(M));

        const auto sub = max_etale_subcover(M);
        if (sub.degree != static_cast<int>(blocks.size()) || sub.degree * sub.residual_degree != M.degree())
            out.etale.fail("etale subcover degree mismatch: " + show(M));
        if ((sub.degree == 1) != fast)
            out.etale.fail("degree-1 verdict differs from genuine ramification: " + show(M));
        if ((sub.degree == M.degree()) != M.branch_cycles().empty() && M.degree() > 1)
            out.etale.fail("etale degree d but branch cycles present: " + show(M));
        if (!is_connected(sub.block_datum) || !sub.block_datum.branch_cycles().empty())
            out.etale.fail("block datum is not a connected etale cover: " + show(M));
    } catch (const std::exception& e) {
        out.ramification.fail(std::string("exception: ") + e.what() + " for " + show(M));
    }
}

} // namespace

SweepResult suite_monodromy_sweep(const SuiteOptions& opt, int max_degree)
{
    (void)opt;
    SweepResult out{{"genuine_ramification_sweep"}, {"etale_subcover_sweep"}};
    for (int d = 2; d <= max_degree; ++d) {
        std::vector<Permutation> perms;
        std::vector<int> images(static_cast<std::size_t>(d));
        std::iota(images.begin(), images.end(), 0);
        do {
            Permutation p(images);
            if (!p.is_identity())
                perms.push_back(std::move(p));
        } while (std::next_permutation(images.begin(), images.end()));

        for (const auto& s : perms) {
            auto M = MonodromyDatum::create(0, d, 0, {}, {{"b1", s}, {"b2", s.inverse()}});
            if (is_connected(M))
                check_datum(out, M);
        }
        for (const auto& s1 : perms)
            for (const auto& s2 : perms) {
                const auto s3 = (s1 * s2).inverse();
                if (s3.is_identity())
                    continue;
                auto M = MonodromyDatum::create(0, d, 0, {}, {{"b1", s1}, {"b2", s2}, {"b3", s3}});
                if (is_connected(M))
                    check_datum(out, M);
            }
    }
    return out;
}

SweepResult suite_monodromy_random(const SuiteOptions& opt, std::uint64_t cases, int max_degree)
{
    SweepResult out{{"genuine_ramification_random"}, {"etale_subcover_random"}};
    Rng rng(opt.seed ^ 0x6a1);
    for (std::uint64_t i = 0; i < cases; ++i) {
        const int handles = static_cast<int>(rng.uniform(0, 1));
        check_datum(out, random_monodromy(rng, max_degree, handles, rng.coin(0.8) ? 0 : 7));
    }
    return out;
}

SuiteResult suite_kummer_family(const SuiteOptions& opt, int max_m)
{
    (void)opt;
    SuiteResult r{"kummer_family"};
    for (int m = 2; m <= max_m; ++m) {
        ++r.cases;
        try {
            const auto M = kummer_datum(m);
            const auto f = ramification_profile_of(M);
            if (!is_connected(M) || !is_galois(M) || !is_genuinely_ramified(M) ||
                max_etale_subcover(M).degree != 1 || f.source().genus != 0)
                r.fail("z^" + std::to_string(m) + " fails one of connected/Galois/genuinely "
                       "ramified/etale degree 1/genus 0");
        } catch (const std::exception& e) {
            r.fail("z^" + std::to_string(m) + ": " + e.what());
        }
    }
    return r;
}

// ---- orbdiv ------------------------------------------------------------------

SuiteResult suite_divisors(const SuiteOptions& opt, std::uint64_t cases)
{
    SuiteResult r{"divisors"};
    Rng rng(opt.seed ^ 0xd1);
    for_cases(r, cases, [&](std::uint64_t) {
        const CurveTag X{"X", 0, random_characteristic(rng)};
        const OrbifoldCurve XP(random_branch_data(rng, X));
        const auto D = random_divisor(rng, XP, 4);
        const auto D2 = random_divisor(rng, XP, 4);
        if (deg_P(D + D2) != deg_P(D) + deg_P(D2))
            r.fail("deg not additive on " + show(D));

        // Linear equivalence on genus 0: D ~ D' iff D - D' = sum c_x n_x x with sum c_x = 0.
        auto E = D - D2;
        bool equivalent = true;
        std::int64_t total = 0;
        for (const auto& [x, k] : E.coefficients()) {
            const int n = XP.order(x);
            equivalent = equivalent && k % n == 0;
            total += k / n;
        }
        equivalent = equivalent && total == 0;
        if ((class_of(D) == class_of(D2)) != equivalent)
            r.fail("class_of disagrees with linear equivalence on " + show(D) + " vs " + show(D2));

        // A moved representative: add n_x.x at a stacky point, remove a free point.
        if (!XP.branch_data().empty()) {
            const auto& [x, n] = *XP.branch_data().orders().begin();
            const OrbDivisor shift(XP, {{x, n}, {free_base_point(XP), -1}});
            if (!(class_of(D + shift) == class_of(D)))
                r.fail("class_of not invariant under n_x.x - pt on " + show(D));
        }

        // h0 against the floor of the divisor.
        std::int64_t floor_sum = 0;
        for (const auto& [x, k] : D.coefficients())
            floor_sum += floor_div(k, XP.order(x));
        const auto L = class_of(D);
        if (h0(L) != std::max<std::int64_t>(0, floor_sum + 1))
            r.fail("h0 differs from the floor count on " + show(D));
        const OrbLineClass bigger = class_add(L, class_of(OrbDivisor(XP, {{free_base_point(XP), 1}})));
        if (h0(bigger) < h0(L))
            r.fail("h0 not monotone on " + show(D));

        const auto M = class_of(D2);
        if (hom_dim(L, M) > 0 && L.total_degree() > M.total_degree())
            r.fail("nonzero Hom lowers degree: " + show(L) + " -> " + show(M));
    });
    return r;
}

SuiteResult suite_parabolic(const SuiteOptions& opt, std::uint64_t cases)
{
    SuiteResult r{"parabolic_identity"};
    Rng rng(opt.seed ^ 0xa7ab);
    for_cases(r, cases, [&](std::uint64_t) {
        const CurveTag X{"X", 0, random_characteristic(rng)};
        const OrbifoldCurve XP(random_branch_data(rng, X));
        const auto L = random_class(rng, XP);
        const auto fv = floor_view(L);
        Rational total(fv.coarse_degree);
        for (const auto& [x, w] : fv.weights) {
            if (w <= 0 || w >= 1)
                r.fail("weight outside (0,1) at " + x + " for " + show(L));
            total += w;
        }
        if (total != L.total_degree())
            r.fail("coarse + weights = " + to_string(total) + " != " + show(L));
        const auto E = random_bundle(rng, XP);
        if (parabolic_view(E).parabolic_slope != slope_P(E))
            r.fail("parabolic slope differs from P-slope");
    });
    return r;
}

// ---- bundles -----------------------------------------------------------------

SuiteResult suite_hn(const SuiteOptions& opt, std::uint64_t cases)
{
    SuiteResult r{"hn_and_stability"};
    Rng rng(opt.seed ^ 0x4a);
    for_cases(r, cases, [&](std::uint64_t) {
        const CurveTag X{"X", 0, random_characteristic(rng)};
        const auto P = random_branch_data(rng, X);
        const OrbifoldCurve XP(P);
        const auto E = random_bundle(rng, XP);
        const auto report = hn(E);

        std::vector<int> seen;
        for (std::size_t i = 0; i < report.size(); ++i) {
            if (i > 0 && !(report[i].slope < report[i - 1].slope))
                r.fail("HN slopes not strictly decreasing");
            std::vector<OrbLineClass> part;
            for (int j : report[i].indices) {
                part.push_back(E.summands()[static_cast<std::size_t>(j)]);
                seen.push_back(j);
            }
            const OrbBundle stratum(part);
            if (!is_semistable(stratum) || slope_P(stratum) != report[i].slope)
                r.fail("HN stratum not semistable of its slope");
        }
        std::sort(seen.begin(), seen.end());
        std::vector<int> all(static_cast<std::size_t>(E.rank()));
        std::iota(all.begin(), all.end(), 0);
        if (seen != all)
            r.fail("HN strata do not partition the summands");

        const bool ss = is_semistable(E);
        if (ss != (slope_P(E) == mu_max(E)))
            r.fail("semistable iff slope = mu_max fails");
        if (is_polystable(E) != ss || is_stable(E) != (E.rank() == 1))
            r.fail("polystable/stable verdicts incoherent for decomposable bundle");

        const auto F = random_bundle(rng, XP);
        if (deg_P(direct_sum(E, F)) != deg_P(E) + deg_P(F))
            r.fail("deg not additive on direct sums");

        const auto L = random_class(rng, XP);
        const auto EL = tensor_line(E, L);
        if (is_semistable(EL) != ss)
            r.fail("tensor by a line changes the semistability verdict");
        const auto hnL = hn(EL);
        for (std::size_t i = 0; i < report.size(); ++i)
            if (hnL[i].slope != report[i].slope + L.total_degree())
                r.fail("tensor by a line does not shift HN slopes");

        const auto P2 = random_refinement(rng, P);
        const auto iE = iota_pullback(E, P2);
        if (is_semistable(iE) != ss || is_polystable(iE) != is_polystable(E) ||
            is_stable(iE) != is_stable(E))
            r.fail("iota pullback changes a verdict");

        const auto f = random_profile(rng, X, 6, true);
        const auto fP = pullback_branch_data(f, P);
        const auto Q = random_refinement(rng, fP);
        const auto fE = pullback_bundle(E, f, Q);
        if (is_semistable(fE) != ss)
            r.fail("pullback changes the semistability verdict");
        if (slope_P(fE) != Rational(f.degree()) * slope_P(E))
            r.fail("pullback slope " + to_string(slope_P(fE)) + " != " + std::to_string(f.degree()) +
                   " * " + to_string(slope_P(E)));
        if (!is_stable(OrbBundle({pullback_class(L, f, Q)})))
            r.fail("rank-1 pullback not stable");
    });
    return r;
}

// ---- equivariant -----------------------------------------------------------

SuiteResult suite_equivariant_equivalence(const SuiteOptions& opt, int m, std::uint64_t cases)
{
    SuiteResult r{"equivariant_equivalence_m" + std::to_string(m)};
    Rng rng(opt.seed ^ (0xe0 + static_cast<std::uint64_t>(m)));
    const CyclicCoverSpec spec{m, 0};
    const auto XP = target_orbifold(spec);
    for_cases(r, cases, [&](std::uint64_t) {
        const auto L = random_class(rng, XP);
        const auto TL = T_pullback(L, spec);
        if (!(S_pushforward(TL) == L))
            r.fail("S(T(L)) != L for " + show(L));
        if (Rational(eq_degree(TL)) != Rational(m) * L.total_degree())
            r.fail("eq_degree(T L) != m deg_P(L) for " + show(L));

        const auto W = random_eq_line_bundle(rng, spec);
        const auto TSW = T_pullback(S_pushforward(W), spec);
        if (!(TSW == canonical(W)) || !isomorphic(TSW, W))
            r.fail("T(S(W)) is not the normal form of " + show(W));
        if (h0_invariants(W) != h0(S_pushforward(W)) || h0_invariants(TSW) != h0_invariants(W))
            r.fail("invariant sections of " + show(W) + " do not match sections of S(W)");
        const auto N = random_class(rng, XP, 3);
        if (h0(class_add(S_pushforward(W), N)) != h0_invariants(tensor(W, T_pullback(N, spec))))
            r.fail("h0(S(W) + N) != invariant sections of W (x) T(N) for " + show(W) + ", " + show(N));

        const auto E = random_bundle(rng, XP);
        const auto TE = T_pullback(E, spec);
        if (is_semistable(E) != eq_is_semistable(TE) || is_polystable(E) != eq_is_polystable(TE))
            r.fail("semistable/polystable verdict changes across T");

        std::vector<EqLineBundle> ws;
        for (auto k = rng.uniform(1, 3); k > 0; --k)
            ws.push_back(rng.coin() ? W : random_eq_line_bundle(rng, spec, 3));
        const EqBundle V(ws);
        if (eq_is_semistable(V) != is_semistable(S_pushforward(V)))
            r.fail("semistable verdict changes across S");
    });
    return r;
}

SuiteResult suite_hom_equivalence(const SuiteOptions& opt, int m, std::uint64_t cases)
{
    SuiteResult r{"hom_equivalence_m" + std::to_string(m)};
    Rng rng(opt.seed ^ (0x40 + static_cast<std::uint64_t>(m)));
    const CyclicCoverSpec spec{m, 0};
    const auto XP = target_orbifold(spec);
    for_cases(r, cases, [&](std::uint64_t) {
        const auto L = random_class(rng, XP, 4);
        const auto M = random_class(rng, XP, 4);
        const auto eq = hom_dim_equivariant(T_pullback(L, spec), T_pullback(M, spec));
        const auto orb = hom_dim(L, M);
        if (eq != orb)
            r.fail("equivariant Hom " + std::to_string(eq) + " != orbifold Hom " +
                   std::to_string(orb) + " for " + show(L) + ", " + show(M));
    });
    return r;
}

SuiteResult suite_adjunction(const SuiteOptions& opt, int m, std::uint64_t cases)
{
    SuiteResult r{"adjunction_m" + std::to_string(m)};
    Rng rng(opt.seed ^ (0xad0 + static_cast<std::uint64_t>(m)));
    const CyclicCoverSpec spec{m, 0};
    const auto XP = target_orbifold(spec);
    const auto pieces = pushforward_structure(spec);
    for_cases(r, cases, [&](std::uint64_t) {
        const auto L = random_class(rng, XP, 4);
        const auto M = random_class(rng, XP, 4);
        std::int64_t sum = 0;
        for (const auto& piece : pieces)
            sum += hom_dim(L, class_add(M, piece));
        const auto plain = hom_dim_plain(T_pullback(L, spec), T_pullback(M, spec));
        if (sum != plain)
            r.fail("sum over characters " + std::to_string(sum) + " != plain Hom " +
                   std::to_string(plain) + " for " + show(L) + ", " + show(M));
    });
    return r;
}

// ---- driver ------------------------------------------------------------------

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt, std::uint64_t scale)
{
    std::vector<SuiteResult> out;
    const std::uint64_t n = 40 * scale;
    out.push_back(suite_branch_calculus(opt, n));
    out.push_back(suite_degree_multiplicativity(opt, n));
    out.push_back(suite_iota_invariance(opt, n));
    out.push_back(suite_divisors(opt, n));
    out.push_back(suite_parabolic(opt, n));
    out.push_back(suite_hn(opt, n));

    const int sweep_degree = scale == 0 ? 1 : static_cast<int>(std::min<std::uint64_t>(5, 3 + scale));
    auto sweep = suite_monodromy_sweep(opt, sweep_degree);
    out.push_back(sweep.ramification);
    out.push_back(sweep.etale);
    auto random = suite_monodromy_random(opt, n / 2, 8);
    out.push_back(random.ramification);
    out.push_back(random.etale);
    out.push_back(suite_kummer_family(opt, scale == 0 ? 1 : 12));

    for (int m : {2, 3, 4, 6, 12}) {
        out.push_back(suite_equivariant_equivalence(opt, m, n / 2));
        out.push_back(suite_hom_equivalence(opt, m, n / 2));
    }
    for (int m : {2, 3, 4})
        out.push_back(suite_adjunction(opt, m, n / 2));
    return out;
}

} // namespace orbifold
