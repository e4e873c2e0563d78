#include "excount/rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace excount {

Representation zero_rep(const Quiver& q) {
    Representation r;
    r.dim.assign(q.n, 0);
    r.mats.assign(q.arrows.size(), IntMatrix(0, 0));
    return r;
}

Representation simple_rep(const Quiver& q, int v) {
    if (v < 1 || v > q.n) throw std::invalid_argument("simple_rep: no such vertex");
    Representation r;
    r.dim.assign(q.n, 0);
    r.dim[v - 1] = 1;
    for (const Arrow& a : q.arrows)
        r.mats.emplace_back(r.dim[a.tgt - 1], r.dim[a.src - 1]);
    return r;
}

Representation interval_module(const Quiver& q, int a, int b) {
    if (a > b) throw std::invalid_argument("interval_module: need a <= b");
    const Component* comp = nullptr;
    for (const Component& c : q.components)
        if (std::find(c.vertices.begin(), c.vertices.end(), a) != c.vertices.end())
            comp = &c;
    if (!comp || std::find(comp->vertices.begin(), comp->vertices.end(), b) ==
                     comp->vertices.end())
        throw std::invalid_argument("interval_module: vertices not in one component");
    if (comp->family != Family::A)
        throw std::invalid_argument("interval_module: component is not of type A");

    auto pos = [&](int v) {
        return int(std::find(comp->vertices.begin(), comp->vertices.end(), v) -
                   comp->vertices.begin());
    };
    int lo = std::min(pos(a), pos(b)), hi = std::max(pos(a), pos(b));

    Representation r;
    r.dim.assign(q.n, 0);
    for (int i = lo; i <= hi; ++i) r.dim[comp->vertices[i] - 1] = 1;
    for (const Arrow& ar : q.arrows) {
        IntMatrix m(r.dim[ar.tgt - 1], r.dim[ar.src - 1]);
        if (m.rows == 1 && m.cols == 1) m.at(0, 0) = 1;
        r.mats.push_back(std::move(m));
    }
    return r;
}

i64 hom_dim(const Quiver& q, const Representation& m, const Representation& n) {
    if (int(m.dim.size()) != q.n || int(n.dim.size()) != q.n)
        throw std::invalid_argument("hom_dim: representation size mismatch");

    std::vector<int> base(q.n);
    int total = 0;
    for (int v = 0; v < q.n; ++v) {
        base[v] = total;
        total += m.dim[v] * n.dim[v];
    }
    if (total == 0) return 0;

    // One equation per arrow a: s->t and per entry (r, c) of the product
    // phi_t M(a) - N(a) phi_s, unknowns phi_v stored row-major.
    int eqs = 0;
    for (size_t ai = 0; ai < q.arrows.size(); ++ai)
        eqs += n.dim[q.arrows[ai].tgt - 1] * m.dim[q.arrows[ai].src - 1];

    IntMatrix sys(eqs, total);
    int row = 0;
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        int s = q.arrows[ai].src - 1, t = q.arrows[ai].tgt - 1;
        const IntMatrix& A = m.mats[ai];  // m.dim[t] x m.dim[s]
        const IntMatrix& B = n.mats[ai];  // n.dim[t] x n.dim[s]
        for (int r = 0; r < n.dim[t]; ++r)
            for (int c = 0; c < m.dim[s]; ++c) {
                for (int k = 0; k < m.dim[t]; ++k)
                    sys.at(row, base[t] + r * m.dim[t] + k) += A.at(k, c);
                for (int k = 0; k < n.dim[s]; ++k)
                    sys.at(row, base[s] + k * m.dim[s] + c) -= B.at(r, k);
                ++row;
            }
    }
    return total - rank(sys);
}

i64 ext_dim(const Quiver& q, const Representation& m, const Representation& n) {
    i64 e = hom_dim(q, m, n) - euler_form(q, m.dim, n.dim);
    if (e < 0)
        throw std::logic_error("negative ext dimension; inputs are inconsistent");
    return e;
}

Reflected reflect(const Quiver& q, int v, const Representation& r) {
    bool sink = is_sink(q, v), source = is_source(q, v);
    if (!sink && !source)
        throw std::invalid_argument("reflect: vertex is neither sink nor source");
    int dv = r.dim[v - 1];
    int support = 0;
    for (int x : r.dim) support += x;
    if (dv == 1 && support == 1)
        throw std::invalid_argument("reflect: the simple at the vertex is annihilated");

    std::vector<size_t> touched;  // arrows incident to v, in arrow order
    int nbr_total = 0;
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const Arrow& a = q.arrows[ai];
        if (a.src == v || a.tgt == v) {
            touched.push_back(ai);
            nbr_total += r.dim[(a.src == v ? a.tgt : a.src) - 1];
        }
    }

    Reflected out;
    out.quiver = flip_at_vertex(q, v);
    out.rep.dim = r.dim;
    out.rep.dim[v - 1] = nbr_total - dv;
    if (out.rep.dim[v - 1] < 0)
        throw std::invalid_argument("reflect: representation has a summand at the vertex");

    std::vector<IntMatrix> new_at_v(touched.size());
    if (sink) {
        // Kernel of the combined map  (+) M_u -> M_v, block columns per arrow.
        IntMatrix comb(dv, nbr_total);
        int off = 0;
        for (size_t ti = 0; ti < touched.size(); ++ti) {
            const IntMatrix& A = r.mats[touched[ti]];  // dv x d_u
            for (int i = 0; i < dv; ++i)
                for (int j = 0; j < A.cols; ++j) comb.at(i, off + j) = A.at(i, j);
            off += A.cols;
        }
        auto K = kernel_basis(comb);
        if (int(K.size()) != out.rep.dim[v - 1])
            throw std::invalid_argument("reflect: in-map is not surjective (simple summand at vertex)");
        off = 0;
        for (size_t ti = 0; ti < touched.size(); ++ti) {
            int du = r.mats[touched[ti]].cols;
            IntMatrix M(du, int(K.size()));  // new arrow v -> u
            for (int j = 0; j < int(K.size()); ++j)
                for (int i = 0; i < du; ++i) M.at(i, j) = K[j][off + i];
            new_at_v[ti] = std::move(M);
            off += du;
        }
    } else {
        // Cokernel of the combined map M_v -> (+) M_u, presented by a left
        // kernel basis P (P comb = 0); new arrow u -> v is P cut to u's block.
        IntMatrix comb(nbr_total, dv);
        int off = 0;
        for (size_t ti = 0; ti < touched.size(); ++ti) {
            const IntMatrix& A = r.mats[touched[ti]];  // d_u x dv
            for (int i = 0; i < A.rows; ++i)
                for (int j = 0; j < dv; ++j) comb.at(off + i, j) = A.at(i, j);
            off += A.rows;
        }
        auto P = left_kernel_basis(comb);
        if (int(P.size()) != out.rep.dim[v - 1])
            throw std::invalid_argument("reflect: out-map is not injective (simple summand at vertex)");
        off = 0;
        for (size_t ti = 0; ti < touched.size(); ++ti) {
            int du = r.mats[touched[ti]].rows;
            IntMatrix M(int(P.size()), du);  // new arrow u -> v
            for (int i = 0; i < int(P.size()); ++i)
                for (int j = 0; j < du; ++j) M.at(i, j) = P[i][off + j];
            new_at_v[ti] = std::move(M);
            off += du;
        }
    }

    out.rep.mats.resize(q.arrows.size());
    size_t ti = 0;
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const Arrow& a = q.arrows[ai];
        if (a.src == v || a.tgt == v)
            out.rep.mats[ai] = std::move(new_at_v[ti++]);
        else
            out.rep.mats[ai] = r.mats[ai];
    }
    return out;
}

}  // namespace excount
