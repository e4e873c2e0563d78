#include "excount/forests.hpp"

#include <stdexcept>
#include <string>

namespace excount {

namespace {

bool acyclic(const Forest& f) {
    int n = static_cast<int>(f.size());
    for (int v = 1; v <= n; ++v) {
        int cur = v;
        for (int steps = 0; f[cur - 1] != 0; ++steps) {
            if (steps >= n) return false;
            cur = f[cur - 1];
        }
    }
    return true;
}

}  // namespace

void for_each_forest(int n, const std::function<void(const Forest&)>& visit) {
    if (n < 1 || n > 8) throw std::invalid_argument("forest enumeration guarded to 1 <= n <= 8");
    Forest f(n, 0);
    while (true) {
        if (acyclic(f)) visit(f);
        int v = 0;
        while (v < n) {
            ++f[v];
            if (f[v] == v + 1) ++f[v];  // p(v) = v never occurs
            if (f[v] <= n) break;
            f[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
}

i64 count_forests(int n) {
    i64 total = 0;
    for_each_forest(n, [&total](const Forest&) { ++total; });
    return total;
}

VertexClass classify_vertex(const Forest& f, int v) {
    int p = f.at(v - 1);
    if (p == 0) return VertexClass::Root;
    return v > p ? VertexClass::Ascending : VertexClass::Descending;
}

MultiPoly ascending_gf(int n) {
    MultiPoly gf = MultiPoly::constant(0, 1);
    for_each_forest(n, [&](const Forest& f) {
        int asc = 0;
        for (int v = 1; v <= n; ++v)
            if (classify_vertex(f, v) == VertexClass::Ascending) ++asc;
        gf.add_term({asc}, 1);
    });
    return gf;
}

MultiPoly ascending_gf_formula(int n) {
    MultiPoly f = MultiPoly::constant(1, 1);
    for (int k = 1; k <= n - 1; ++k)
        f = f * (MultiPoly::variable(1, 1).scaled(n - k) + MultiPoly::constant(k + 1, 1));
    return f;
}

ForestIndependence descending_independence_report(int n) {
    if (n > 7) throw std::invalid_argument("independence report guarded to n <= 7");
    ForestIndependence rep;
    rep.n = n;
    std::vector<i64> marginal(n, 0);
    std::map<std::uint32_t, i64> joint;
    for_each_forest(n, [&](const Forest& f) {
        ++rep.total;
        std::uint32_t mask = 0;
        for (int v = 1; v <= n; ++v)
            if (classify_vertex(f, v) == VertexClass::Descending) {
                ++marginal[v - 1];
                mask |= 1u << (v - 1);
            }
        ++joint[mask];
    });
    for (int v = 1; v <= n; ++v) rep.marginals.emplace_back(marginal[v - 1], rep.total);
    rep.failures = subset_independence_failures(joint, marginal, rep.total, n);
    rep.ok = rep.failures.empty();
    return rep;
}

DistributionMatch match_excseq_distribution(int n) {
    if (n > 6) throw std::invalid_argument("distribution match guarded to n <= 6");
    DistributionMatch dm;

    for_each_forest(n, [&](const Forest& f) {
        std::uint32_t proj = 0, inj = 0;
        for (int v = 1; v <= n; ++v) {
            VertexClass c = classify_vertex(f, v);
            if (c != VertexClass::Ascending) proj |= 1u << (v - 1);  // root or descending
            if (c != VertexClass::Descending) inj |= 1u << (v - 1);  // root or ascending
        }
        ++dm.forest_proj[proj];
        ++dm.forest_inj[inj];
    });

    std::string spec = "A" + std::to_string(n) + ":" + std::string(n - 1, '<');
    IndecCatalog cat = indecomposables(parse_quiver(spec));
    SeqTally tally = tally_sequences(cat, n);
    dm.seq_proj = tally.relproj_joint;
    dm.seq_inj = tally.relinj_joint;

    dm.proj_match = dm.forest_proj == dm.seq_proj;
    dm.inj_match = dm.forest_inj == dm.seq_inj;
    return dm;
}

}  // namespace excount
