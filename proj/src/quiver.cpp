#include "excount/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace excount {

namespace {

[[noreturn]] void parse_fail(const std::string& token, const std::string& why) {
    throw std::invalid_argument("bad quiver spec near \"" + token + "\": " + why);
}

}  // namespace

Quiver make_quiver(int n, std::vector<Arrow> arrows) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::vector<std::vector<int>> adj(n + 1);
    std::set<std::pair<int, int>> seen_edges;
    for (const Arrow& a : arrows) {
        if (a.src < 1 || a.src > n || a.tgt < 1 || a.tgt > n)
            throw std::invalid_argument("arrow endpoint out of range");
        if (a.src == a.tgt) throw std::invalid_argument("loop arrow");
        auto e = std::minmax(a.src, a.tgt);
        if (!seen_edges.insert({e.first, e.second}).second)
            throw std::invalid_argument("parallel edge between vertices " +
                                        std::to_string(e.first) + " and " +
                                        std::to_string(e.second));
        adj[a.src].push_back(a.tgt);
        adj[a.tgt].push_back(a.src);
    }

    Quiver q;
    q.n = n;
    q.arrows = std::move(arrows);

    std::vector<bool> visited(n + 1, false);
    for (int start = 1; start <= n; ++start) {
        if (visited[start]) continue;
        std::vector<int> verts{start};
        visited[start] = true;
        for (size_t i = 0; i < verts.size(); ++i)
            for (int u : adj[verts[i]])
                if (!visited[u]) { visited[u] = true; verts.push_back(u); }
        std::sort(verts.begin(), verts.end());

        int m = int(verts.size());
        int edges = 0, deg3 = 0, deg1 = 0, maxdeg = 0, center = 0;
        for (int v : verts) {
            int d = int(adj[v].size());
            edges += d;
            maxdeg = std::max(maxdeg, d);
            if (d == 3) { ++deg3; center = v; }
            if (d <= 1) ++deg1;
        }
        edges /= 2;
        if (edges != m - 1)
            throw std::invalid_argument("component through vertex " +
                                        std::to_string(start) + " contains a cycle");

        Component comp;
        if (maxdeg <= 2) {
            comp.family = Family::A;
            if (m == 1) {
                comp.vertices = verts;
            } else {
                int end = 0;  // smaller endpoint starts the walk
                for (int v : verts)
                    if (adj[v].size() == 1) { end = v; break; }
                std::vector<int> order{end};
                int prev = 0, cur = end;
                while (int(order.size()) < m) {
                    for (int u : adj[cur])
                        if (u != prev) { order.push_back(u); prev = cur; cur = u; break; }
                }
                comp.vertices = std::move(order);
            }
        } else if (m == 4 && deg3 == 1 && deg1 == 3) {
            comp.family = Family::D4;
            comp.vertices.clear();
            for (int v : verts)
                if (v != center) comp.vertices.push_back(v);
            comp.vertices.push_back(center);
        } else {
            throw std::invalid_argument("component through vertex " +
                                        std::to_string(start) +
                                        " is neither an A path nor a D4 star");
        }
        q.components.push_back(std::move(comp));
    }
    return q;
}

Quiver parse_quiver(const std::string& spec) {
    std::vector<Arrow> arrows;
    int n = 0;

    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t plus = spec.find('+', pos);
        std::string tok = spec.substr(pos, plus == std::string::npos ? std::string::npos
                                                                     : plus - pos);
        if (tok.empty()) parse_fail(spec, "empty component");

        size_t colon = tok.find(':');
        if (colon == std::string::npos) parse_fail(tok, "missing ':'");
        std::string head = tok.substr(0, colon);
        std::string orient = tok.substr(colon + 1);

        if (head.size() < 2 || (head[0] != 'A' && head[0] != 'D'))
            parse_fail(tok, "family must be A<n> or D4");
        for (size_t i = 1; i < head.size(); ++i)
            if (!std::isdigit((unsigned char)head[i])) parse_fail(tok, "malformed rank");
        int m = std::stoi(head.substr(1));

        for (char c : orient)
            if (c != '<' && c != '>') parse_fail(tok, "orientation must use '<' and '>'");

        if (head[0] == 'D') {
            if (m != 4) parse_fail(tok, "only D4 is supported");
            if (orient.size() != 3) parse_fail(tok, "D4 needs exactly 3 orientation characters");
            for (int j = 0; j < 3; ++j) {
                int leaf = n + 1 + j, center = n + 4;
                arrows.push_back(orient[j] == '>' ? Arrow{leaf, center}
                                                  : Arrow{center, leaf});
            }
            n += 4;
        } else {
            if (m < 1) parse_fail(tok, "rank must be at least 1");
            if (int(orient.size()) != m - 1)
                parse_fail(tok, "A" + std::to_string(m) + " needs exactly " +
                                    std::to_string(m - 1) + " orientation characters");
            for (int i = 0; i < m - 1; ++i) {
                int a = n + i + 1, b = n + i + 2;
                arrows.push_back(orient[i] == '>' ? Arrow{a, b} : Arrow{b, a});
            }
            n += m;
        }

        if (plus == std::string::npos) break;
        pos = plus + 1;
        if (pos == spec.size()) parse_fail(spec, "trailing '+'");
    }
    return make_quiver(n, std::move(arrows));
}

Quiver delete_vertex(const Quiver& q, int v) {
    if (v < 1 || v > q.n) throw std::invalid_argument("delete_vertex: no such vertex");
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows) {
        if (a.src == v || a.tgt == v) continue;
        arrows.push_back({a.src - (a.src > v), a.tgt - (a.tgt > v)});
    }
    return make_quiver(q.n - 1, std::move(arrows));
}

Quiver opposite(const Quiver& q) {
    std::vector<Arrow> arrows;
    arrows.reserve(q.arrows.size());
    for (const Arrow& a : q.arrows) arrows.push_back({a.tgt, a.src});
    return make_quiver(q.n, std::move(arrows));
}

Quiver flip_at_vertex(const Quiver& q, int v) {
    if (v < 1 || v > q.n) throw std::invalid_argument("flip_at_vertex: no such vertex");
    std::vector<Arrow> arrows;
    arrows.reserve(q.arrows.size());
    for (const Arrow& a : q.arrows)
        arrows.push_back(a.src == v || a.tgt == v ? Arrow{a.tgt, a.src} : a);
    return make_quiver(q.n, std::move(arrows));
}

bool is_sink(const Quiver& q, int v) {
    for (const Arrow& a : q.arrows)
        if (a.src == v) return false;
    return true;
}

bool is_source(const Quiver& q, int v) {
    for (const Arrow& a : q.arrows)
        if (a.tgt == v) return false;
    return true;
}

int coxeter_number(const Quiver& q) {
    if (q.components.size() != 1)
        throw std::invalid_argument("coxeter_number needs a connected quiver");
    return q.components[0].family == Family::D4 ? 6 : q.n + 1;
}

i64 euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    if (int(d.size()) != q.n || int(e.size()) != q.n)
        throw std::invalid_argument("euler_form: dimension vector size mismatch");
    i64 s = 0;
    for (int v = 0; v < q.n; ++v) s += i64(d[v]) * e[v];
    for (const Arrow& a : q.arrows) s -= i64(d[a.src - 1]) * e[a.tgt - 1];
    return s;
}

}  // namespace excount
