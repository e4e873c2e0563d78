#include "excount/catalog.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace excount {

int IndecCatalog::find(const DimVector& d) const {
    for (int i = 0; i < size(); ++i)
        if (members[i].dim == d) return i;
    return -1;
}

namespace {

// Reflection closure for one D4 component inside q.  States are keyed by the
// component's arrow directions (bit j set when arrow j points at the center)
// and the dimension vector; dimension vectors identify indecomposables in
// Dynkin type.
std::vector<Representation> d4_component_members(const Quiver& q, const Component& comp) {
    int center = comp.vertices[3];
    std::vector<size_t> comp_arrows;
    for (size_t ai = 0; ai < q.arrows.size(); ++ai)
        if (q.arrows[ai].src == center || q.arrows[ai].tgt == center) {
            int other = q.arrows[ai].src == center ? q.arrows[ai].tgt : q.arrows[ai].src;
            if (std::find(comp.vertices.begin(), comp.vertices.end(), other) !=
                comp.vertices.end())
                comp_arrows.push_back(ai);
        }
    if (comp_arrows.size() != 3)
        throw std::logic_error("D4 component without three star arrows");

    auto key_of = [&](const Quiver& variant) {
        int key = 0;
        for (int j = 0; j < 3; ++j)
            if (variant.arrows[comp_arrows[j]].tgt == center) key |= 1 << j;
        return key;
    };

    // Materialize the eight orientation variants of q.
    std::vector<Quiver> variant(8);
    for (int key = 0; key < 8; ++key) {
        std::vector<Arrow> arrows = q.arrows;
        for (int j = 0; j < 3; ++j) {
            Arrow& a = arrows[comp_arrows[j]];
            int leaf = a.src == center ? a.tgt : a.src;
            a = (key >> j & 1) ? Arrow{leaf, center} : Arrow{center, leaf};
        }
        variant[key] = make_quiver(q.n, std::move(arrows));
    }
    int home = key_of(q);

    std::vector<std::map<DimVector, Representation>> found(8);
    std::deque<std::pair<int, DimVector>> queue;
    for (int key = 0; key < 8; ++key)
        for (int v : comp.vertices) {
            Representation s = simple_rep(variant[key], v);
            DimVector d = s.dim;
            found[key].emplace(d, std::move(s));
            queue.emplace_back(key, d);
        }

    while (!queue.empty()) {
        auto [key, d] = queue.front();
        queue.pop_front();
        const Representation& rep = found[key].at(d);
        for (int v : comp.vertices) {
            if (!is_sink(variant[key], v) && !is_source(variant[key], v)) continue;
            if (rep.dim[v - 1] == 1 &&
                std::count(rep.dim.begin(), rep.dim.end(), 0) == q.n - 1)
                continue;  // simple at v
            Reflected ref = reflect(variant[key], v, rep);
            int nk = key_of(ref.quiver);
            if (found[nk].emplace(ref.rep.dim, ref.rep).second)
                queue.emplace_back(nk, ref.rep.dim);
        }
    }

    if (found[home].size() != 12)
        throw std::logic_error("D4 reflection closure did not reach 12 classes");
    std::vector<Representation> out;
    for (auto& [d, rep] : found[home]) out.push_back(rep);
    return out;
}

}  // namespace

IndecCatalog indecomposables(const Quiver& q) {
    IndecCatalog cat;
    cat.quiver = q;

    for (const Component& comp : q.components) {
        if (comp.family == Family::A) {
            int m = int(comp.vertices.size());
            for (int i = 0; i < m; ++i)
                for (int j = i; j < m; ++j) {
                    int a = std::min(comp.vertices[i], comp.vertices[j]);
                    int b = std::max(comp.vertices[i], comp.vertices[j]);
                    cat.members.push_back(interval_module(q, a, b));
                }
        } else {
            for (Representation& r : d4_component_members(q, comp))
                cat.members.push_back(std::move(r));
        }
    }

    std::sort(cat.members.begin(), cat.members.end(),
              [](const Representation& a, const Representation& b) { return a.dim < b.dim; });

    int n = cat.size();
    cat.hom.assign(n, std::vector<int>(n, 0));
    cat.ext.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cat.hom[i][j] = int(hom_dim(q, cat.members[i], cat.members[j]));
            cat.ext[i][j] = int(ext_dim(q, cat.members[i], cat.members[j]));
        }
    for (int i = 0; i < n; ++i)
        if (cat.hom[i][i] != 1 || cat.ext[i][i] != 0)
            throw std::logic_error("catalog member is not exceptional");
    return cat;
}

}  // namespace excount
