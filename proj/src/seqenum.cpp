#include "excount/seqenum.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace excount {

namespace {

i64 multiplicity_factorials(const std::vector<int>& lambda) {
    i64 prod = 1;
    int run = 1;
    for (size_t i = 1; i <= lambda.size(); ++i) {
        if (i < lambda.size() && lambda[i] == lambda[i - 1]) {
            ++run;
        } else {
            prod = checked_mul(prod, factorial(run));
            run = 1;
        }
    }
    return prod;
}

struct Dfs {
    const IndecCatalog& cat;
    int len;
    const std::function<void(const SequenceRecord&)>& visit;

    std::vector<int> chosen;                  // right-to-left
    std::vector<std::uint8_t> flags;          // relproj, right-to-left
    SequenceRecord rec;

    Dfs(const IndecCatalog& c, int l, const std::function<void(const SequenceRecord&)>& v)
        : cat(c), len(l), visit(v) {}

    bool ext_projective(int e, const std::vector<int>& members) const {
        for (int y : members)
            if (cat.ext[e][y]) return false;
        return true;
    }

    void emit(const std::vector<int>& members) {
        rec.terms.assign(chosen.rbegin(), chosen.rend());
        rec.relproj.assign(flags.rbegin(), flags.rend());
        rec.perp_members = members;

        PerpCategory perp = make_perp(cat, members);
        rec.perp_type = perp_type(perp, len);

        // second pass: left perps of the growing prefix
        rec.relinj.assign(len, 0);
        std::vector<int> live(cat.size());
        for (int y = 0; y < cat.size(); ++y) live[y] = y;
        std::vector<int> next;
        for (int i = 0; i < len; ++i) {
            int e = rec.terms[i];
            std::uint8_t inj = 1;
            next.clear();
            for (int y : live) {
                if (cat.ext[y][e]) inj = 0;
                if (!cat.hom[y][e] && !cat.ext[y][e]) next.push_back(y);
            }
            rec.relinj[i] = inj;
            live.swap(next);
        }
        visit(rec);
    }

    void descend(const std::vector<int>& members, int depth) {
        if (depth == len) {
            emit(members);
            return;
        }
        std::vector<int> narrowed;
        for (int e : members) {
            chosen.push_back(e);
            flags.push_back(ext_projective(e, members) ? 1 : 0);
            narrowed.clear();
            for (int y : members)
                if (!cat.hom[e][y] && !cat.ext[e][y]) narrowed.push_back(y);
            descend(narrowed, depth + 1);
            chosen.pop_back();
            flags.pop_back();
        }
    }
};

}  // namespace

void for_each_sequence(const IndecCatalog& cat, int len,
                       const std::function<void(const SequenceRecord&)>& visit,
                       int rightmost) {
    if (len < 0 || len > cat.quiver.n)
        throw std::invalid_argument("sequence length must lie in [0, rank]");

    Dfs dfs(cat, len, visit);
    std::vector<int> all(cat.size());
    for (int y = 0; y < cat.size(); ++y) all[y] = y;

    if (len == 0) {
        if (rightmost < 0) dfs.emit(all);
        return;
    }
    for (int e : all) {
        if (rightmost >= 0 && e != rightmost) continue;
        dfs.chosen.push_back(e);
        dfs.flags.push_back(dfs.ext_projective(e, all) ? 1 : 0);
        std::vector<int> narrowed;
        for (int y : all)
            if (!cat.hom[e][y] && !cat.ext[e][y]) narrowed.push_back(y);
        dfs.descend(narrowed, 1);
        dfs.chosen.pop_back();
        dfs.flags.pop_back();
    }
}

void SeqTally::absorb(const SequenceRecord& rec) {
    ++total;
    auto& [n, np] = by_lambda[rec.perp_type];
    ++n;
    if (!rec.relproj.empty() && rec.relproj.front()) ++np;

    std::uint32_t pmask = 0, imask = 0;
    int nproj = 0;
    for (int i = 0; i < len; ++i) {
        if (rec.relproj[i]) {
            ++relproj_marginal[i];
            pmask |= 1u << i;
            ++nproj;
        }
        if (rec.relinj[i]) {
            ++relinj_marginal[i];
            imask |= 1u << i;
        }
    }
    ++relproj_joint[pmask];
    ++relinj_joint[imask];
    signed_sum += i64(1) << nproj;
}

void SeqTally::merge(const SeqTally& other) {
    total += other.total;
    for (const auto& [lam, counts] : other.by_lambda) {
        auto& [n, np] = by_lambda[lam];
        n += counts.first;
        np += counts.second;
    }
    for (int i = 0; i < len; ++i) {
        relproj_marginal[i] += other.relproj_marginal[i];
        relinj_marginal[i] += other.relinj_marginal[i];
    }
    for (const auto& [m, c] : other.relproj_joint) relproj_joint[m] += c;
    for (const auto& [m, c] : other.relinj_joint) relinj_joint[m] += c;
    signed_sum += other.signed_sum;
}

SeqTally tally_sequences(const IndecCatalog& cat, int len, int jobs) {
    if (jobs < 1) throw std::invalid_argument("jobs must be positive");
    auto fresh = [len]() {
        SeqTally t;
        t.len = len;
        t.relproj_marginal.assign(len, 0);
        t.relinj_marginal.assign(len, 0);
        return t;
    };

    if (jobs == 1 || len == 0) {
        SeqTally t = fresh();
        for_each_sequence(cat, len, [&t](const SequenceRecord& r) { t.absorb(r); });
        return t;
    }

    std::vector<SeqTally> partial(jobs, fresh());
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&, w]() {
            for (int r = w; r < cat.size(); r += jobs)
                for_each_sequence(
                    cat, len, [&](const SequenceRecord& rec) { partial[w].absorb(rec); },
                    r);
        });
    for (auto& th : pool) th.join();

    SeqTally t = fresh();
    for (const auto& p : partial) t.merge(p);
    return t;
}

i64 count_sequences(const IndecCatalog& cat, int len, int jobs) {
    return tally_sequences(cat, len, jobs).total;
}

i64 count_formula_a(int n, int len) {
    if (len == 0) return 1;
    return checked_mul(binomial(n + 1, len + 1), ipow(n + 1, len - 1));
}

i64 n_lambda_formula(int h, const std::vector<int>& lambda) {
    int k = static_cast<int>(lambda.size()) - 1;
    i64 numer = checked_mul(factorial(k), ipow(h, k));
    i64 denom = multiplicity_factorials(lambda);
    if (numer % denom != 0) throw std::logic_error("non-integer tally value");
    return numer / denom;
}

i64 np_lambda_formula(int h, const std::vector<int>& lambda) {
    int k = static_cast<int>(lambda.size()) - 1;
    if (k < 1) throw std::invalid_argument("leftmost-projective tally needs k >= 1");
    i64 numer = checked_mul(factorial(k + 1), ipow(h, k - 1));
    i64 denom = multiplicity_factorials(lambda);
    if (numer % denom != 0) throw std::logic_error("non-integer tally value");
    return numer / denom;
}

MultiPoly multivariate_gf(const SeqTally& tally) {
    MultiPoly f = MultiPoly::constant(0, tally.len);
    std::vector<int> e(tally.len);
    for (const auto& [mask, count] : tally.relproj_joint) {
        for (int i = 0; i < tally.len; ++i) e[i] = (mask >> i) & 1;
        f.add_term(e, count);
    }
    return f;
}

Rational relproj_probability(const SeqTally& tally, int rpos) {
    if (rpos < 1 || rpos > tally.len) throw std::invalid_argument("bad right position");
    return Rational(tally.relproj_marginal[tally.len - rpos], tally.total);
}

std::vector<SubsetFailure> subset_independence_failures(
    const std::map<std::uint32_t, i64>& joint, const std::vector<i64>& marginal,
    i64 total, int len) {
    std::vector<SubsetFailure> failures;
    for (std::uint32_t s = 1; s < (1u << len); ++s) {
        i64 inter = 0;
        for (const auto& [m, c] : joint)
            if ((m & s) == s) inter += c;

        int bits = __builtin_popcount(s);
        i128 lhs = inter;
        for (int i = 0; i < bits - 1; ++i) lhs *= total;
        i128 rhs = 1;
        for (int i = 0; i < len; ++i)
            if (s & (1u << i)) rhs *= marginal[i];

        if (lhs != rhs)
            failures.push_back({s, i128_to_string(lhs), i128_to_string(rhs)});
    }
    return failures;
}

IndependenceReport independence_report(const SeqTally& tally) {
    IndependenceReport rep;
    rep.len = tally.len;
    rep.total = tally.total;
    // reindex joint masks and marginals from left position to right position
    std::map<std::uint32_t, i64> joint;
    for (const auto& [m, c] : tally.relproj_joint) {
        std::uint32_t rm = 0;
        for (int i = 0; i < tally.len; ++i)
            if (m & (1u << i)) rm |= 1u << (tally.len - 1 - i);
        joint[rm] += c;
    }
    std::vector<i64> marginal(tally.relproj_marginal.rbegin(),
                              tally.relproj_marginal.rend());
    for (int k = 1; k <= tally.len; ++k)
        rep.marginals.emplace_back(marginal[k - 1], tally.total);
    rep.failures = subset_independence_failures(joint, marginal, tally.total, tally.len);
    rep.ok = rep.failures.empty();
    return rep;
}

IndependenceReport injectivity_report(const SeqTally& tally) {
    IndependenceReport rep;
    rep.len = tally.len;
    rep.total = tally.total;
    for (int j = 1; j <= tally.len; ++j)
        rep.marginals.emplace_back(tally.relinj_marginal[j - 1], tally.total);
    rep.failures = subset_independence_failures(tally.relinj_joint,
                                                tally.relinj_marginal, tally.total,
                                                tally.len);
    rep.ok = rep.failures.empty();
    return rep;
}

i64 signed_count(const SeqTally& tally) { return tally.signed_sum; }

i64 signed_formula_a(int n, int k) {
    i64 numer = binomial(n + 1, k + 1);
    for (int j = n + 3; j <= n + k + 2; ++j) numer = checked_mul(numer, j);
    if (numer % (n + 1) != 0) throw std::logic_error("non-integer signed count");
    return numer / (n + 1);
}

}  // namespace excount
