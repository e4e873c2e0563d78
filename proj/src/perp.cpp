#include "excount/perp.hpp"

#include <algorithm>
#include <stdexcept>

namespace excount {

namespace {

// m(m+1)/2 == count, or -1 when count is not triangular.
int triangular_rank(int count) {
    int m = 0;
    while (m * (m + 1) / 2 < count) ++m;
    return m * (m + 1) / 2 == count ? m : -1;
}

}  // namespace

PerpCategory make_perp(const IndecCatalog& cat, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    PerpCategory p;
    p.members = std::move(members);

    const int m = static_cast<int>(p.members.size());
    std::vector<int> comp(m, -1);
    int ncomp = 0;
    for (int i = 0; i < m; ++i) {
        if (comp[i] >= 0) continue;
        // Flood fill over the non-orthogonality graph.
        std::vector<int> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            int x = p.members[u];
            for (int v = 0; v < m; ++v) {
                if (comp[v] >= 0) continue;
                int y = p.members[v];
                if (cat.hom[x][y] || cat.ext[x][y] || cat.hom[y][x] || cat.ext[y][x]) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
            }
        }
        ++ncomp;
    }

    p.blocks.assign(ncomp, {});
    for (int i = 0; i < m; ++i) p.blocks[comp[i]].push_back(p.members[i]);
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });

    p.block_ranks.reserve(ncomp);
    for (const auto& b : p.blocks) {
        // A_m blocks carry m(m+1)/2 indecomposables; a D_4 block carries 12,
        // which is not triangular, so the two readings never collide.
        int sz = static_cast<int>(b.size());
        int r = sz == 12 ? 4 : triangular_rank(sz);
        if (r < 0)
            throw std::logic_error("perp block of size " + std::to_string(sz) +
                                   " is not Dynkin A or D4");
        p.block_ranks.push_back(r);
    }
    return p;
}

PerpCategory right_perp(const IndecCatalog& cat, const std::vector<int>& generators) {
    std::vector<int> members;
    for (int y = 0; y < cat.size(); ++y) {
        bool keep = true;
        for (int g : generators)
            if (cat.hom[g][y] || cat.ext[g][y]) {
                keep = false;
                break;
            }
        if (keep) members.push_back(y);
    }
    return make_perp(cat, std::move(members));
}

PerpCategory left_perp(const IndecCatalog& cat, const std::vector<int>& generators) {
    std::vector<int> members;
    for (int y = 0; y < cat.size(); ++y) {
        bool keep = true;
        for (int g : generators)
            if (cat.hom[y][g] || cat.ext[y][g]) {
                keep = false;
                break;
            }
        if (keep) members.push_back(y);
    }
    return make_perp(cat, std::move(members));
}

std::vector<int> perp_type(const PerpCategory& p, int k) {
    std::vector<int> type = p.block_ranks;
    std::sort(type.begin(), type.end());
    if (static_cast<int>(type.size()) <= k + 1)
        type.insert(type.begin(), k + 1 - type.size(), 0);
    return type;
}

bool is_rel_projective(const IndecCatalog& cat, int e, const PerpCategory& p) {
    for (int y : p.members)
        if (cat.ext[e][y]) return false;
    return true;
}

bool is_rel_injective(const IndecCatalog& cat, int e, const PerpCategory& p) {
    for (int y : p.members)
        if (cat.ext[y][e]) return false;
    return true;
}

}  // namespace excount
