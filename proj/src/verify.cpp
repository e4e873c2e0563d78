#include "excount/verify.hpp"

#include <chrono>
#include <sstream>

#include "excount/cyclecomb.hpp"
#include "excount/forests.hpp"
#include "excount/genfun.hpp"
#include "excount/seqenum.hpp"

namespace excount {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

std::string lambda_str(const std::vector<int>& lambda) {
    std::string s = "(";
    for (size_t i = 0; i < lambda.size(); ++i)
        s += (i ? "," : "") + std::to_string(lambda[i]);
    return s + ")";
}

std::string ints_str(const std::vector<i64>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

std::string rationals_str(const std::vector<Rational>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + "]";
}

// 1-based indices of the set bits, e.g. "{2,3}"
std::string mask_str(std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; mask >> i; ++i)
        if (mask & (1u << i)) {
            if (!first) s += ",";
            s += std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

std::string failures_str(const std::vector<SubsetFailure>& failures) {
    if (failures.empty()) return "none";
    std::string s;
    for (const auto& f : failures) {
        if (!s.empty()) s += "; ";
        s += mask_str(f.mask) + " " + f.lhs + " vs " + f.rhs;
    }
    return s;
}

IndecCatalog catalog_of(const std::string& spec) {
    return indecomposables(parse_quiver(spec));
}

}  // namespace

std::vector<std::string> a_orientation_specs(int n) {
    std::string prefix = "A" + std::to_string(n) + ":";
    if (n <= 5) {
        std::vector<std::string> out;
        for (int bits = 0; bits < (1 << (n - 1)); ++bits) {
            std::string orient;
            for (int i = 0; i < n - 1; ++i) orient += (bits >> i) & 1 ? '>' : '<';
            out.push_back(prefix + orient);
        }
        return out;
    }
    if (n == 6) return {prefix + "<<<<<", prefix + "><<>>"};
    return {prefix + std::string(n - 1, '<')};
}

std::vector<std::string> d4_orientation_specs() {
    return {"D4:>>>", "D4:<<<", "D4:><>"};
}

std::string opposite_spec(const std::string& spec) {
    std::string out = spec;
    for (char& c : out) {
        if (c == '<')
            c = '>';
        else if (c == '>')
            c = '<';
    }
    return out;
}

Report verify_cycle(const VerifyOptions& opt) {
    Report rep;
    rep.suite = "cycle";
    for (int h = 2; h <= opt.hmax; ++h) {
        Timer timer;
        int partitions = 0;
        std::string count_bad, sum_bad, fusion_bad, pair_bad;
        std::vector<i64> sums, binomials;
        for (int k = 0; k <= h - 1; ++k) {
            i64 sum = 0;
            for (const auto& lam : nonneg_partitions(h - (k + 1), k + 1)) {
                ++partitions;
                i64 formula = s_count_formula(h, lam);
                sum += formula;
                if (formula != s_count_bruteforce(h, lam) && count_bad.empty())
                    count_bad = lambda_str(lam);
                if (k >= 1) {
                    FusionCheck fc = fusion_check(h, lam);
                    if (!(fc.applicable && fc.ok) && fusion_bad.empty())
                        fusion_bad = lambda_str(lam) + " lhs=" + std::to_string(fc.lhs) +
                                     " rhs=" + std::to_string(fc.rhs_total);
                    if (pair_sum_identity(lam) != i64(k) * h && pair_bad.empty())
                        pair_bad = lambda_str(lam);
                }
            }
            sums.push_back(sum);
            binomials.push_back(binomial(h, k + 1));
        }
        std::string hs = std::to_string(h);
        std::string npart = std::to_string(partitions);
        rep.add("cycle.count.h" + hs,
                "arc-length counts: closed form equals brute force over all " + npart +
                    " partitions, h=" + hs,
                "no mismatches", count_bad.empty() ? "no mismatches" : count_bad)
            .wall_ms = timer.ms();
        rep.add("cycle.sum.h" + hs,
                "per-k totals equal C(h,k+1), h=" + hs, ints_str(binomials),
                ints_str(sums));
        rep.add("cycle.fusion.h" + hs,
                "fusion identity holds for every partition with k >= 1, h=" + hs,
                "no failures", fusion_bad.empty() ? "no failures" : fusion_bad);
        rep.add("cycle.pairsum.h" + hs,
                "sum over part pairs of (a+b+2) equals k*h, h=" + hs, "no failures",
                pair_bad.empty() ? "no failures" : pair_bad);
    }

    if (opt.hmax >= 12) {
        Timer timer;
        std::vector<int> lam{0, 1, 2, 2, 2};
        rep.add("cycle.example.count", "|S_12(0,1,2,2,2)|",
                "48", std::to_string(s_count_formula(12, lam)))
            .wall_ms = timer.ms();
        FusionCheck fc = fusion_check(12, lam);
        std::string ledger;
        for (const auto& item : fc.items)
            ledger += (ledger.empty() ? "" : "+") + std::to_string(item.summand);
        ledger += "=" + std::to_string(fc.rhs_total) +
                  (fc.ok ? " (=5*48)" : " (mismatch)");
        rep.add("cycle.example.fusion", "fusion ledger for S_12(0,1,2,2,2)",
                "24+72+72+72=240 (=5*48)", ledger);
    }
    return rep;
}

Report verify_excseq(const VerifyOptions& opt) {
    Report rep;
    rep.suite = "excseq";
    for (int n = 1; n <= opt.nmax; ++n) {
        int h = n + 1;
        // formula bridge: N = h^(k-1) |S_h(lambda)| for every shape
        for (int k = 1; k <= n; ++k) {
            std::vector<i64> lhs, rhs;
            for (const auto& lam : nonneg_partitions(n - k, k + 1)) {
                lhs.push_back(n_lambda_formula(h, lam));
                rhs.push_back(checked_mul(ipow(h, k - 1), s_count_formula(h, lam)));
            }
            rep.add("excseq.cycle-link.n" + std::to_string(n) + ".k" + std::to_string(k),
                    "tally closed form equals h^(k-1) times the arc count, n=" +
                        std::to_string(n) + " k=" + std::to_string(k),
                    ints_str(lhs), ints_str(rhs));
        }

        for (const std::string& spec : a_orientation_specs(n)) {
            Timer timer;
            IndecCatalog cat = catalog_of(spec);
            std::vector<SeqTally> tallies;
            for (int len = 0; len <= n; ++len)
                tallies.push_back(tally_sequences(cat, len, opt.jobs));

            std::vector<i64> counts, expected_counts;
            for (int len = 0; len <= n; ++len) {
                counts.push_back(tallies[len].total);
                expected_counts.push_back(count_formula_a(n, len));
            }
            rep.add("excseq.count." + spec,
                    "sequence counts for len 0.." + std::to_string(n) +
                        " equal C(n+1,len+1)(n+1)^(len-1)",
                    ints_str(expected_counts), ints_str(counts))
                .wall_ms = timer.ms();

            for (int k = 1; k <= n; ++k) {
                std::string want, got;
                for (const auto& lam : nonneg_partitions(n - k, k + 1)) {
                    want += lambda_str(lam) + ":" +
                            std::to_string(n_lambda_formula(h, lam)) + "," +
                            std::to_string(np_lambda_formula(h, lam)) + " ";
                }
                for (const auto& [lam, counts_np] : tallies[k].by_lambda)
                    got += lambda_str(lam) + ":" + std::to_string(counts_np.first) +
                           "," + std::to_string(counts_np.second) + " ";
                rep.add("excseq.tally." + spec + ".k" + std::to_string(k),
                        "per-type tallies (N,N^p) match the closed forms",
                        want, got);

                std::string ratio_bad;
                for (const auto& [lam, counts_np] : tallies[k].by_lambda)
                    if (i64(h) * counts_np.second != i64(k + 1) * counts_np.first &&
                        ratio_bad.empty())
                        ratio_bad = lambda_str(lam);
                rep.add("excseq.ratio." + spec + ".k" + std::to_string(k),
                        "h*N^p = (k+1)*N for every perp type", "no failures",
                        ratio_bad.empty() ? "no failures" : ratio_bad);
            }
        }
    }
    return rep;
}

Report verify_prob(const VerifyOptions& opt) {
    Report rep;
    rep.suite = "prob";
    for (int n = 1; n <= opt.nmax; ++n)
        for (const std::string& spec : a_orientation_specs(n)) {
            IndecCatalog cat = catalog_of(spec);
            IndecCatalog opp = catalog_of(opposite_spec(spec));
            for (int len = 1; len <= n; ++len) {
                Timer timer;
                SeqTally tally = tally_sequences(cat, len, opt.jobs);
                std::string tag = spec + ".len" + std::to_string(len);

                IndependenceReport proj = independence_report(tally);
                std::vector<Rational> expected;
                for (int k = 1; k <= len; ++k) expected.emplace_back(k + 1, n + 1);
                rep.add("prob.marginals." + tag,
                        "relative-projectivity marginals by right position equal "
                        "(k+1)/(n+1)",
                        rationals_str(expected), rationals_str(proj.marginals))
                    .wall_ms = timer.ms();
                rep.add("prob.indep." + tag,
                        "all-subset independence of the projectivity events",
                        "none", failures_str(proj.failures));

                IndependenceReport inj = injectivity_report(tally);
                std::vector<Rational> expected_inj;
                for (int j = 1; j <= len; ++j) expected_inj.emplace_back(j + 1, n + 1);
                rep.add("prob.inj-marginals." + tag,
                        "relative-injectivity marginals by left position equal "
                        "(j+1)/(n+1)",
                        rationals_str(expected_inj), rationals_str(inj.marginals));
                rep.add("prob.inj-indep." + tag,
                        "all-subset independence of the injectivity events", "none",
                        failures_str(inj.failures));

                // duality: relinj pattern equals the mirrored relproj pattern of
                // the reversed quiver
                SeqTally opp_tally = tally_sequences(opp, len, opt.jobs);
                std::map<std::uint32_t, i64> mirrored;
                for (const auto& [m, c] : opp_tally.relproj_joint) {
                    std::uint32_t rm = 0;
                    for (int i = 0; i < len; ++i)
                        if (m & (1u << i)) rm |= 1u << (len - 1 - i);
                    mirrored[rm] += c;
                }
                rep.add("prob.duality." + tag,
                        "relinj joint distribution equals reversed relproj joint of " +
                            opposite_spec(spec),
                        "match", tally.relinj_joint == mirrored ? "match" : "mismatch");
            }
        }
    return rep;
}

Report verify_gfrec(const VerifyOptions& opt) {
    Report rep;
    rep.suite = "gfrec";

    for (int n = 1; n <= std::min(opt.nmax, 5); ++n)
        for (const std::string& spec : a_orientation_specs(n)) {
            Timer timer;
            IndecCatalog cat = catalog_of(spec);
            MultiPoly rec = recursive_gf(std::vector<int>{n});
            MultiPoly enumerated = multivariate_gf(tally_sequences(cat, n, opt.jobs));
            rep.add("gfrec.enum-vs-rec." + spec,
                    "enumerated complete-sequence gf equals the deletion recursion",
                    rec.str(), enumerated.str())
                .wall_ms = timer.ms();
        }

    {
        Timer timer;
        std::string first, mismatch;
        for (const std::string& spec : a_orientation_specs(4)) {
            MultiPoly f = multivariate_gf(tally_sequences(catalog_of(spec), 4, opt.jobs));
            if (first.empty())
                first = f.str();
            else if (f.str() != first && mismatch.empty())
                mismatch = spec;
        }
        rep.add("gfrec.a4-invariance",
                "complete-sequence gf agrees across all 8 orientations of the "
                "4-vertex path",
                "8 identical polynomials",
                mismatch.empty() ? "8 identical polynomials" : "differs at " + mismatch)
            .wall_ms = timer.ms();
    }

    for (int n = 1; n <= 7; ++n) {
        rep.add("gfrec.rec-vs-closed.A" + std::to_string(n),
                "deletion recursion equals the closed-form product",
                closed_form_a(n).str(), recursive_gf(std::vector<int>{n}).str());
        FactorResult fr = linear_factor_check(closed_form_a(n));
        rep.add("gfrec.split.A" + std::to_string(n),
                "closed form splits into per-variable linear factors", "fully split",
                fr.fully_split ? "fully split" : "residual " + fr.residual.str());
        rep.add("gfrec.onevar-closed.A" + std::to_string(n),
                "collapse of the closed form equals the one-variable product",
                one_var_gf_a(n, n).str(), closed_form_a(n).collapsed().str());
    }

    // shuffle rule against direct enumeration over disconnected quivers
    {
        const std::vector<std::pair<std::string, std::vector<int>>> cases = {
            {"A1:+A1:", {1, 1}}, {"A1:+A2:>", {1, 2}}, {"A1:+A1:+A1:", {1, 1, 1}}};
        for (const auto& [spec, codes] : cases) {
            IndecCatalog cat = catalog_of(spec);
            int total = cat.quiver.n;
            MultiPoly enumerated =
                multivariate_gf(tally_sequences(cat, total, opt.jobs));
            rep.add("gfrec.shuffle." + spec,
                    "shuffle-product recursion equals direct enumeration",
                    recursive_gf(codes).str(), enumerated.str());
        }
    }

    for (int n = 1; n <= opt.nmax; ++n)
        for (const std::string& spec : a_orientation_specs(n)) {
            Timer timer;
            IndecCatalog cat = catalog_of(spec);
            std::vector<i64> by_formula, by_tally, by_eval;
            std::string onevar_bad;
            for (int k = 1; k <= n; ++k) {
                SeqTally tally = tally_sequences(cat, k, opt.jobs);
                MultiPoly f = multivariate_gf(tally);
                by_formula.push_back(signed_formula_a(n, k));
                by_tally.push_back(signed_count(tally));
                Rational at2 = f.evaluate_all(Rational(2));
                by_eval.push_back(at2.is_integer() ? at2.num : -1);
                if (f.collapsed() != one_var_gf_a(n, k) && onevar_bad.empty())
                    onevar_bad = "k=" + std::to_string(k);
            }
            rep.add("gfrec.onevar." + spec,
                    "collapsed length-k gf equals the one-variable closed form for "
                    "every k",
                    "no mismatches", onevar_bad.empty() ? "no mismatches" : onevar_bad)
                .wall_ms = timer.ms();
            rep.add("gfrec.signed." + spec,
                    "signed counts: closed form vs per-sequence 2^#relproj sum",
                    ints_str(by_formula), ints_str(by_tally));
            rep.add("gfrec.signed-eval." + spec,
                    "signed counts: closed form vs gf evaluated at 2",
                    ints_str(by_formula), ints_str(by_eval));
        }

    // the 4-vertex star package
    {
        MultiPoly rec = recursive_gf(std::vector<int>{D4_CODE});
        MultiPoly z1 = MultiPoly::variable(1, 4), z2 = MultiPoly::variable(2, 4),
                  z3 = MultiPoly::variable(3, 4), z4 = MultiPoly::variable(4, 4);
        MultiPoly printed = z1.scaled(6) * (z4 + MultiPoly::constant(2, 4)) *
                            (z2 * z3.scaled(4) + z2.scaled(3) + z3 +
                             MultiPoly::constant(1, 4));
        rep.add("gfrec.d4.printed-form",
                "deletion recursion equals 6*z1*(z4+2)*(4*z2*z3+3*z2+z3+1)",
                printed.str(), rec.str());

        SeqTally d4_tally;
        for (const std::string& spec : d4_orientation_specs()) {
            Timer timer;
            IndecCatalog cat = catalog_of(spec);
            SeqTally tally = tally_sequences(cat, 4, opt.jobs);
            MultiPoly enumerated = multivariate_gf(tally);
            rep.add("gfrec.d4.enum-vs-rec." + spec,
                    "enumerated complete-sequence gf equals the recursion", rec.str(),
                    enumerated.str())
                .wall_ms = timer.ms();
            if (spec == "D4:>>>") d4_tally = std::move(tally);
        }

        rep.add("gfrec.d4.values", "gf at all-ones and all-twos", "162, 1200",
                rec.evaluate_all(Rational(1)).str() + ", " +
                    rec.evaluate_all(Rational(2)).str());
        rep.add("gfrec.d4.signed", "per-sequence 2^#relproj sum", "1200",
                std::to_string(signed_count(d4_tally)));

        MultiPoly z = MultiPoly::variable(1, 1);
        MultiPoly collapsed_form = z.scaled(6) * (z + MultiPoly::constant(2, 1)) *
                                   (z.scaled(2) + MultiPoly::constant(1, 1)) *
                                   (z.scaled(2) + MultiPoly::constant(1, 1));
        rep.add("gfrec.d4.collapse", "collapsed gf equals 6z(z+2)(2z+1)^2",
                collapsed_form.str(), rec.collapsed().str());

        FactorResult fr = linear_factor_check(rec);
        std::string factors;
        for (const auto& lf : fr.factors) {
            if (!factors.empty()) factors += ", ";
            factors += (lf.c == 1 ? "" : std::to_string(lf.c) + "*") + "z" +
                       std::to_string(lf.var) +
                       (lf.d ? "+" + std::to_string(lf.d) : "");
        }
        factors += fr.fully_split ? " (fully split)" : " (residual not linear)";
        rep.add("gfrec.d4.factor", "exactly z1 and z4+2 split off",
                "z1, z4+2 (residual not linear)", factors);

        IndependenceReport ind = independence_report(d4_tally);
        std::string singles, pairs;
        bool supersets_only = true;
        for (const auto& f : ind.failures) {
            int bits = __builtin_popcount(f.mask);
            if (bits == 1) singles += mask_str(f.mask) + " ";
            if (bits == 2) {
                if (!pairs.empty()) pairs += "; ";
                pairs += mask_str(f.mask) + " " + f.lhs + " vs " + f.rhs;
            }
            if ((f.mask & 0b0110u) != 0b0110u) supersets_only = false;
        }
        rep.add("gfrec.d4.independence",
                "independence fails exactly at the events for right positions 2,3 "
                "and their supersets",
                "singletons: none; pairs: {2,3} 11664 vs 11340; all failures contain "
                "{2,3}",
                "singletons: " + (singles.empty() ? std::string("none") : singles) +
                    "; pairs: " + pairs +
                    (supersets_only ? "; all failures contain {2,3}"
                                    : "; failure outside supersets of {2,3}"));
    }
    return rep;
}

Report verify_forests(const VerifyOptions& opt) {
    Report rep;
    rep.suite = "forests";
    int count_max = std::min(7, opt.nmax + 1);

    {
        Timer timer;
        std::vector<i64> counts, expected;
        for (int n = 1; n <= count_max; ++n) {
            counts.push_back(count_forests(n));
            expected.push_back(ipow(n + 1, n - 1));
        }
        rep.add("forests.count", "forest counts for n=1.." + std::to_string(count_max) +
                                     " equal (n+1)^(n-1)",
                ints_str(expected), ints_str(counts))
            .wall_ms = timer.ms();
    }

    for (int n = 1; n <= count_max; ++n)
        rep.add("forests.gf.n" + std::to_string(n),
                "ascending-vertex gf equals prod(k+1+(n-k)a)",
                ascending_gf_formula(n).str(), ascending_gf(n).str());

    {
        Forest fig{3, 0, 0, 3};
        auto name = [](VertexClass c) {
            return c == VertexClass::Root ? "root"
                   : c == VertexClass::Ascending ? "ascending"
                                                 : "descending";
        };
        std::string classes;
        for (int v = 1; v <= 4; ++v)
            classes += std::string(v > 1 ? ", " : "") + name(classify_vertex(fig, v));
        rep.add("forests.classify",
                "vertex classes of the forest with parents (3,root,root,3)",
                "descending, root, root, ascending", classes);
    }

    for (int n = 1; n <= std::min(6, opt.nmax); ++n) {
        Timer timer;
        ForestIndependence ind = descending_independence_report(n);
        std::vector<Rational> expected;
        for (int k = 1; k <= n; ++k) expected.emplace_back(n - k, n + 1);
        rep.add("forests.marginals.n" + std::to_string(n),
                "descending-vertex marginals equal (n-k)/(n+1)",
                rationals_str(expected), rationals_str(ind.marginals))
            .wall_ms = timer.ms();
        rep.add("forests.indep.n" + std::to_string(n),
                "all-subset independence of the descending events", "none",
                failures_str(ind.failures));
    }

    for (int n = 1; n <= std::min(6, opt.nmax); ++n) {
        Timer timer;
        DistributionMatch dm = match_excseq_distribution(n);
        rep.add("forests.match.n" + std::to_string(n),
                "root-or-descending vs relproj and root-or-ascending vs relinj joint "
                "distributions over linear A_n",
                "proj match, inj match",
                std::string(dm.proj_match ? "proj match" : "proj MISMATCH") + ", " +
                    (dm.inj_match ? "inj match" : "inj MISMATCH"))
            .wall_ms = timer.ms();
    }
    return rep;
}

std::vector<Report> verify_all(const VerifyOptions& opt) {
    return {verify_cycle(opt), verify_excseq(opt), verify_prob(opt),
            verify_gfrec(opt), verify_forests(opt)};
}

}  // namespace excount
