#include "excount/cli.hpp"

#include <algorithm>

#include <CLI11.hpp>
#include <json.hpp>

#include "excount/cyclecomb.hpp"
#include "excount/forests.hpp"
#include "excount/genfun.hpp"
#include "excount/report.hpp"
#include "excount/seqenum.hpp"
#include "excount/verify.hpp"

namespace excount {

namespace {

using nlohmann::ordered_json;

constexpr int RANK_GUARD = 7;

// rank guard shared by the enumerating subcommands; returns false to refuse
bool check_rank(int n, bool force, std::ostream& err) {
    if (n <= RANK_GUARD) return true;
    if (!force) {
        err << "error: rank " << n << " exceeds the desk guard of " << RANK_GUARD
            << "; pass --force to enumerate anyway\n";
        return false;
    }
    err << "warning: rank guard overridden (--force), this may take a long time\n";
    return true;
}

ordered_json dim_json(const DimVector& d) { return ordered_json(d); }

ordered_json record_json(const IndecCatalog& cat, const SequenceRecord& rec,
                         bool emit_perp) {
    ordered_json j;
    j["terms"] = ordered_json::array();
    for (int t : rec.terms) j["terms"].push_back(dim_json(cat.members[t].dim));
    j["relproj"] = ordered_json::array();
    for (auto b : rec.relproj) j["relproj"].push_back(b != 0);
    j["relinj"] = ordered_json::array();
    for (auto b : rec.relinj) j["relinj"].push_back(b != 0);
    j["perp_type"] = ordered_json(rec.perp_type);
    if (emit_perp) {
        j["perp"] = ordered_json::array();
        for (int m : rec.perp_members) j["perp"].push_back(dim_json(cat.members[m].dim));
    }
    return j;
}

std::string dims_cell(const IndecCatalog& cat, const std::vector<int>& ids) {
    std::string s;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) s += "|";
        const DimVector& d = cat.members[ids[i]].dim;
        s += "(";
        for (size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
        s += ")";
    }
    return s;
}

std::string flags_cell(const std::vector<std::uint8_t>& flags) {
    std::string s;
    for (auto b : flags) s += b ? '1' : '0';
    return s;
}

std::string tuple_cell(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string rational_vec(const std::vector<Rational>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + "]";
}

std::string subset_str(std::uint32_t mask) {
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

ordered_json failures_json(const std::vector<SubsetFailure>& failures) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : failures) {
        ordered_json fj;
        fj["subset"] = subset_str(f.mask);
        fj["lhs"] = f.lhs;
        fj["rhs"] = f.rhs;
        arr.push_back(std::move(fj));
    }
    return arr;
}

bool is_connected_a(const Quiver& q) {
    return q.components.size() == 1 && q.components.front().family == Family::A;
}

std::string factor_str(const LinearFactor& lf) {
    std::string s;
    if (lf.c != 1) s += std::to_string(lf.c) + "*";
    s += "z" + std::to_string(lf.var);
    if (lf.d != 0) s += (lf.d > 0 ? "+" : "") + std::to_string(lf.d);
    return s;
}

int cmd_quiver(const std::string& spec, std::ostream& out) {
    Quiver q = parse_quiver(spec);
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "quiver";
    j["quiver"] = spec;
    j["n"] = q.n;
    j["arrows"] = ordered_json::array();
    for (const Arrow& a : q.arrows) j["arrows"].push_back({a.src, a.tgt});
    j["components"] = ordered_json::array();
    for (const Component& c : q.components) {
        ordered_json cj;
        cj["family"] = c.family == Family::A ? "A" : "D4";
        cj["vertices"] = ordered_json(c.vertices);
        j["components"].push_back(std::move(cj));
    }
    if (q.components.size() == 1) j["coxeter"] = coxeter_number(q);
    out << render_json(j);
    return 0;
}

int cmd_indecs(const std::string& spec, std::ostream& out) {
    IndecCatalog cat = indecomposables(parse_quiver(spec));
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "indecs";
    j["quiver"] = spec;
    j["count"] = cat.size();
    j["members"] = ordered_json::array();
    for (int i = 0; i < cat.size(); ++i) {
        ordered_json m;
        m["id"] = i;
        m["dim"] = dim_json(cat.members[i].dim);
        j["members"].push_back(std::move(m));
    }
    j["hom"] = ordered_json(cat.hom);
    j["ext"] = ordered_json(cat.ext);
    out << render_json(j);
    return 0;
}

int cmd_enumerate(const std::string& spec, int len, bool emit_perp,
                  const std::string& format, bool force, std::ostream& out,
                  std::ostream& err) {
    Quiver q = parse_quiver(spec);
    if (!check_rank(q.n, force, err)) return 2;
    IndecCatalog cat = indecomposables(q);
    if (len < 0) len = q.n;

    if (format == "jsonl") {
        for_each_sequence(cat, len, [&](const SequenceRecord& rec) {
            out << record_json(cat, rec, emit_perp).dump() << "\n";
        });
        return 0;
    }
    if (format == "csv") {
        out << "terms,relproj,relinj,perp_type" << (emit_perp ? ",perp" : "") << "\n";
        for_each_sequence(cat, len, [&](const SequenceRecord& rec) {
            out << dims_cell(cat, rec.terms) << "," << flags_cell(rec.relproj) << ","
                << flags_cell(rec.relinj) << "," << tuple_cell(rec.perp_type);
            if (emit_perp) out << "," << dims_cell(cat, rec.perp_members);
            out << "\n";
        });
        return 0;
    }
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "enumerate";
    j["quiver"] = spec;
    j["len"] = len;
    j["records"] = ordered_json::array();
    for_each_sequence(cat, len, [&](const SequenceRecord& rec) {
        j["records"].push_back(record_json(cat, rec, emit_perp));
    });
    j["count"] = j["records"].size();
    out << render_json(j);
    return 0;
}

int cmd_tally(const std::string& spec, int len, int jobs, bool force, std::ostream& out,
              std::ostream& err) {
    Quiver q = parse_quiver(spec);
    if (!check_rank(q.n, force, err)) return 2;
    IndecCatalog cat = indecomposables(q);
    if (len < 0) len = q.n;
    SeqTally tally = tally_sequences(cat, len, jobs);

    Report rep;
    rep.suite = "tally";
    if (is_connected_a(q)) {
        rep.add("tally.total", "sequence count equals C(n+1,len+1)(n+1)^(len-1)",
                std::to_string(count_formula_a(q.n, len)), std::to_string(tally.total));
        if (len >= 1) {
            int h = q.n + 1;
            for (const auto& [lam, counts] : tally.by_lambda) {
                std::string id = "tally.lambda." + tuple_cell(lam);
                rep.add(id, "per-type (N,N^p) matches the closed forms",
                        std::to_string(n_lambda_formula(h, lam)) + "," +
                            std::to_string(np_lambda_formula(h, lam)),
                        std::to_string(counts.first) + "," +
                            std::to_string(counts.second));
            }
        }
    }

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "tally";
    j["quiver"] = spec;
    j["len"] = len;
    j["total"] = tally.total;
    j["by_lambda"] = ordered_json::array();
    for (const auto& [lam, counts] : tally.by_lambda) {
        ordered_json lj;
        lj["lambda"] = ordered_json(lam);
        lj["n"] = counts.first;
        lj["np"] = counts.second;
        j["by_lambda"].push_back(std::move(lj));
    }
    j["signed"] = tally.signed_sum;
    ordered_json rj = report_json(rep);
    j["checks"] = rj["checks"];
    j["summary"] = rj["summary"];
    j["ok"] = rj["ok"];
    out << render_json(j);
    return rep.all_ok() ? 0 : 1;
}

int cmd_independence(const std::string& spec, int len, int jobs, bool force,
                     std::ostream& out, std::ostream& err) {
    Quiver q = parse_quiver(spec);
    if (!check_rank(q.n, force, err)) return 2;
    IndecCatalog cat = indecomposables(q);
    if (len < 0) len = q.n;
    SeqTally tally = tally_sequences(cat, len, jobs);
    IndependenceReport proj = independence_report(tally);
    IndependenceReport inj = injectivity_report(tally);
    FactorResult fr = linear_factor_check(multivariate_gf(tally));
    bool consistent = fr.fully_split == proj.failures.empty();

    Report rep;
    rep.suite = "independence";
    if (is_connected_a(q)) {
        std::vector<Rational> want_p, want_i;
        for (int k = 1; k <= len; ++k) want_p.emplace_back(k + 1, q.n + 1);
        for (int j2 = 1; j2 <= len; ++j2) want_i.emplace_back(j2 + 1, q.n + 1);
        rep.add("independence.marginals",
                "projectivity marginals by right position equal (k+1)/(n+1)",
                rational_vec(want_p), rational_vec(proj.marginals));
        rep.add("independence.inj-marginals",
                "injectivity marginals by left position equal (j+1)/(n+1)",
                rational_vec(want_i), rational_vec(inj.marginals));
    }
    rep.add("independence.proj", "projectivity events mutually independent", "none",
            proj.failures.empty() ? "none"
                                  : std::to_string(proj.failures.size()) + " failing subsets");
    rep.add("independence.inj", "injectivity events mutually independent", "none",
            inj.failures.empty() ? "none"
                                 : std::to_string(inj.failures.size()) + " failing subsets");
    rep.add("independence.gf-crosscheck",
            "gf splits into linear factors exactly when no subset fails", "consistent",
            consistent ? "consistent" : "inconsistent");

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "independence";
    j["quiver"] = spec;
    j["len"] = len;
    j["total"] = tally.total;
    ordered_json pj;
    pj["marginals_by_rpos"] = rational_vec(proj.marginals);
    pj["failures"] = failures_json(proj.failures);
    j["relproj"] = std::move(pj);
    ordered_json ij;
    ij["marginals_by_leftpos"] = rational_vec(inj.marginals);
    ij["failures"] = failures_json(inj.failures);
    j["relinj"] = std::move(ij);
    j["gf_fully_split"] = fr.fully_split;
    ordered_json rj = report_json(rep);
    j["checks"] = rj["checks"];
    j["summary"] = rj["summary"];
    j["ok"] = rj["ok"];
    out << render_json(j);
    return rep.all_ok() ? 0 : 1;
}

int cmd_signed(const std::string& spec, int len, int jobs, bool force, std::ostream& out,
               std::ostream& err) {
    Quiver q = parse_quiver(spec);
    if (!check_rank(q.n, force, err)) return 2;
    IndecCatalog cat = indecomposables(q);
    if (len < 0) len = q.n;
    SeqTally tally = tally_sequences(cat, len, jobs);
    Rational at2 = multivariate_gf(tally).evaluate_all(Rational(2));

    Report rep;
    rep.suite = "signed";
    rep.add("signed.two-path", "per-sequence 2^#relproj sum equals gf at 2",
            std::to_string(tally.signed_sum), at2.str());
    if (is_connected_a(q) && len >= 1)
        rep.add("signed.formula", "count matches (1/(n+1))C(n+1,k+1)(n+k+2)!/(n+2)!",
                std::to_string(signed_formula_a(q.n, len)),
                std::to_string(tally.signed_sum));

    ordered_json j;
    j["schema"] = 1;
    j["command"] = "signed";
    j["quiver"] = spec;
    j["len"] = len;
    j["signed"] = tally.signed_sum;
    ordered_json rj = report_json(rep);
    j["checks"] = rj["checks"];
    j["summary"] = rj["summary"];
    j["ok"] = rj["ok"];
    out << render_json(j);
    return rep.all_ok() ? 0 : 1;
}

int cmd_forests(int n, bool want_gf, bool want_indep, bool want_match, bool force,
                std::ostream& out, std::ostream& err) {
    if (n > RANK_GUARD && !force) {
        err << "error: n " << n << " exceeds the desk guard of " << RANK_GUARD
            << "; pass --force to enumerate anyway\n";
        return 2;
    }
    if (want_indep && n > 7) {
        err << "error: the independence report is hard-capped at n = 7\n";
        return 2;
    }
    if (want_match && n > 6) {
        err << "error: the sequence-statistics match is hard-capped at n = 6\n";
        return 2;
    }
    if (!want_gf && !want_indep && !want_match) {
        want_gf = true;
        want_indep = n <= 7;
        want_match = n <= 6;
    }

    Report rep;
    rep.suite = "forests";
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "forests";
    j["n"] = n;

    i64 total = count_forests(n);
    j["count"] = total;
    rep.add("forests.count", "forest count equals (n+1)^(n-1)",
            std::to_string(ipow(n + 1, n - 1)), std::to_string(total));

    if (want_gf) {
        MultiPoly gf = ascending_gf(n);
        j["ascending_gf"] = gf.str();
        rep.add("forests.gf", "ascending-vertex gf equals prod(k+1+(n-k)a)",
                ascending_gf_formula(n).str(), gf.str());
    }
    if (want_indep) {
        ForestIndependence ind = descending_independence_report(n);
        ordered_json ij;
        ij["marginals"] = rational_vec(ind.marginals);
        ij["failures"] = failures_json(ind.failures);
        j["descending"] = std::move(ij);
        std::vector<Rational> want;
        for (int k = 1; k <= n; ++k) want.emplace_back(n - k, n + 1);
        rep.add("forests.marginals", "descending marginals equal (n-k)/(n+1)",
                rational_vec(want), rational_vec(ind.marginals));
        rep.add("forests.indep", "descending events mutually independent", "none",
                ind.failures.empty()
                    ? "none"
                    : std::to_string(ind.failures.size()) + " failing subsets");
    }
    if (want_match) {
        DistributionMatch dm = match_excseq_distribution(n);
        j["match"] = {{"proj", dm.proj_match}, {"inj", dm.inj_match}};
        rep.add("forests.match",
                "class statistics match linear-orientation sequence statistics",
                "proj match, inj match",
                std::string(dm.proj_match ? "proj match" : "proj MISMATCH") + ", " +
                    (dm.inj_match ? "inj match" : "inj MISMATCH"));
    }

    ordered_json rj = report_json(rep);
    j["checks"] = rj["checks"];
    j["summary"] = rj["summary"];
    j["ok"] = rj["ok"];
    out << render_json(j);
    return rep.all_ok() ? 0 : 1;
}

int cmd_gf(const std::string& spec, int len, const std::string& method, bool collapse,
           bool factor, const std::vector<std::string>& evals, int jobs, bool force,
           std::ostream& out, std::ostream& err) {
    Quiver q = parse_quiver(spec);
    if (len < 0) len = q.n;

    MultiPoly f;
    if (method == "enum") {
        if (!check_rank(q.n, force, err)) return 2;
        IndecCatalog cat = indecomposables(q);
        f = multivariate_gf(tally_sequences(cat, len, jobs));
    } else if (method == "recursion") {
        if (len != q.n) {
            err << "error: the recursion computes the complete-sequence gf; drop --len "
                   "or set it to "
                << q.n << "\n";
            return 2;
        }
        f = recursive_gf(q);
    } else {  // closed
        if (!is_connected_a(q)) {
            err << "error: closed forms cover connected A quivers only\n";
            return 2;
        }
        f = len == q.n ? closed_form_a(q.n) : one_var_gf_a(q.n, len);
    }

    out << "poly: " << (collapse ? f.collapsed().str() : f.str()) << "\n";
    if (factor) {
        FactorResult fr = linear_factor_check(f);
        for (const auto& lf : fr.factors) out << "factor: " << factor_str(lf) << "\n";
        out << "residual: " << fr.residual.str() << "\n";
        out << "fully_split: " << (fr.fully_split ? "true" : "false") << "\n";
    }
    for (const std::string& e : evals) {
        Rational v = Rational::parse(e);
        out << "f(" << v.str() << ") = " << f.evaluate_all(v).str() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt, bool force,
               std::ostream& out, std::ostream& err) {
    if (opt.nmax > RANK_GUARD && !force) {
        err << "error: --nmax " << opt.nmax << " exceeds the desk guard of "
            << RANK_GUARD << "; pass --force\n";
        return 2;
    }
    if (opt.hmax > 12 && !force) {
        err << "error: --h " << opt.hmax
            << " exceeds the desk guard of 12; pass --force (hard cap 14)\n";
        return 2;
    }
    std::vector<Report> reports;
    if (suite == "all")
        reports = verify_all(opt);
    else if (suite == "cycle")
        reports = {verify_cycle(opt)};
    else if (suite == "excseq")
        reports = {verify_excseq(opt)};
    else if (suite == "prob")
        reports = {verify_prob(opt)};
    else if (suite == "gfrec")
        reports = {verify_gfrec(opt)};
    else
        reports = {verify_forests(opt)};

    ordered_json j = bundle_json(reports, opt.timing);
    out << render_json(j);
    return j["ok"].get<bool>() ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact enumeration and verification for exceptional sequences of "
                 "Dynkin quiver representations"};
    app.name("excount");
    app.require_subcommand(1);

    std::string spec, format = "jsonl", method = "recursion", suite = "all";
    int len = -1, jobs = 1, nvertices = 4;
    bool emit_perp = false, collapse = false, factor = false, force = false;
    bool want_gf = false, want_indep = false, want_match = false;
    std::vector<std::string> evals;
    VerifyOptions vopt;

    auto* c_quiver = app.add_subcommand("quiver", "parse a quiver spec and print it");
    c_quiver->add_option("--quiver", spec, "quiver spec, e.g. A3:<< or D4:>>>")
        ->required();

    auto* c_indecs =
        app.add_subcommand("indecs", "list indecomposables with hom/ext tables");
    c_indecs->add_option("--quiver", spec)->required();

    auto* c_enum = app.add_subcommand("enumerate", "list exceptional sequences");
    c_enum->add_option("--quiver", spec)->required();
    c_enum->add_option("--len", len, "sequence length (default: rank)");
    c_enum->add_flag("--emit-perp", emit_perp, "include the right perp of each sequence");
    c_enum->add_option("--format", format)
        ->check(CLI::IsMember({"jsonl", "csv", "json"}));
    c_enum->add_flag("--force", force, "override the rank guard");

    auto* c_tally = app.add_subcommand("tally", "per-perp-type counts with closed forms");
    c_tally->add_option("--quiver", spec)->required();
    c_tally->add_option("--len", len);
    c_tally->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    c_tally->add_flag("--force", force);

    auto* c_gf = app.add_subcommand("gf", "generating polynomials");
    c_gf->add_option("--quiver", spec)->required();
    c_gf->add_option("--len", len);
    c_gf->add_option("--method", method)
        ->check(CLI::IsMember({"enum", "recursion", "closed"}));
    c_gf->add_flag("--collapse", collapse, "collapse to one variable");
    c_gf->add_flag("--factor", factor, "report per-variable linear factors");
    c_gf->add_option("--eval", evals, "evaluate at this value for every variable");
    c_gf->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    c_gf->add_flag("--force", force);

    auto* c_indep =
        app.add_subcommand("independence", "marginals and subset-independence report");
    c_indep->add_option("--quiver", spec)->required();
    c_indep->add_option("--len", len);
    c_indep->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    c_indep->add_flag("--force", force);

    auto* c_signed = app.add_subcommand("signed", "signed sequence counts");
    c_signed->add_option("--quiver", spec)->required();
    c_signed->add_option("--len", len);
    c_signed->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    c_signed->add_flag("--force", force);

    auto* c_forests = app.add_subcommand("forests", "rooted labeled forest statistics");
    c_forests->add_option("--n", nvertices, "number of vertices")->required();
    c_forests->add_flag("--gf", want_gf, "ascending-vertex generating polynomial");
    c_forests->add_flag("--independence", want_indep, "descending-event independence");
    c_forests->add_flag("--match-excseq", want_match,
                        "compare against sequence statistics");
    c_forests->add_flag("--force", force);

    auto* c_verify = app.add_subcommand("verify", "run verification suites");
    c_verify->set_help_flag("--help", "print help");  // frees -h so --h can be an option
    c_verify
        ->add_option("suite", suite, "cycle, excseq, prob, gfrec, forests, or all")
        ->check(CLI::IsMember({"all", "cycle", "excseq", "prob", "gfrec", "forests"}));
    c_verify->add_option("--nmax", vopt.nmax, "largest A_n rank (default 5)")
        ->check(CLI::PositiveNumber);
    c_verify->add_option("--h", vopt.hmax, "largest cycle size (default 12)")
        ->check(CLI::PositiveNumber);
    c_verify->add_option("--jobs", vopt.jobs)->check(CLI::PositiveNumber);
    c_verify->add_flag("--timing", vopt.timing, "include wall times in the report");
    c_verify->add_flag("--force", force);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_quiver->parsed()) return cmd_quiver(spec, out);
        if (c_indecs->parsed()) return cmd_indecs(spec, out);
        if (c_enum->parsed())
            return cmd_enumerate(spec, len, emit_perp, format, force, out, err);
        if (c_tally->parsed()) return cmd_tally(spec, len, jobs, force, out, err);
        if (c_gf->parsed())
            return cmd_gf(spec, len, method, collapse, factor, evals, jobs, force, out,
                          err);
        if (c_indep->parsed()) return cmd_independence(spec, len, jobs, force, out, err);
        if (c_signed->parsed()) return cmd_signed(spec, len, jobs, force, out, err);
        if (c_forests->parsed())
            return cmd_forests(nvertices, want_gf, want_indep, want_match, force, out,
                               err);
        if (c_verify->parsed()) {
            if (vopt.hmax > 14) {
                err << "error: cycle brute force is hard-capped at h = 14\n";
                return 2;
            }
            return cmd_verify(suite, vopt, force, out, err);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace excount
