#pragma once

#include <optional>
#include <set>
#include <string>

#include "mal/labeling.hpp"

namespace mal {

struct SetCoverInstance {
    int universe_size = 0;                // eta
    std::vector<std::vector<int>> sets;   // mu subsets of [0, eta)

    int eta() const { return universe_size; }
    int mu() const { return static_cast<int>(sets.size()); }

    void validate() const {
        if (universe_size < 1) throw std::invalid_argument("set cover: empty universe");
        if (sets.empty()) throw std::invalid_argument("set cover: no sets");
        std::vector<bool> covered(static_cast<size_t>(universe_size), false);
        for (const auto& s : sets) {
            if (s.empty()) throw std::invalid_argument("set cover: empty subset");
            for (int e : s) {
                if (e < 0 || e >= universe_size)
                    throw std::invalid_argument("set cover: element out of range");
                covered[static_cast<size_t>(e)] = true;
            }
        }
        for (bool c : covered)
            if (!c) throw std::invalid_argument("set cover: uncovered element");
    }

    bool is_cover(const std::vector<int>& cover) const {
        std::vector<bool> covered(static_cast<size_t>(universe_size), false);
        for (int j : cover) {
            if (j < 0 || j >= mu()) return false;
            for (int e : sets[static_cast<size_t>(j)]) covered[static_cast<size_t>(e)] = true;
        }
        for (bool c : covered)
            if (!c) return false;
        return true;
    }
};

struct MinRepInstance {
    // Vertex ids are 0..r*sigma-1 on each side; groups partition each side.
    std::vector<std::vector<int>> groups_a;
    std::vector<std::vector<int>> groups_b;
    std::vector<std::pair<int, int>> edges;  // (A-id, B-id)

    int r() const { return static_cast<int>(groups_a.size()); }
    int sigma() const { return groups_a.empty() ? 0 : static_cast<int>(groups_a.front().size()); }
    int side_size() const { return r() * sigma(); }

    void validate() const {
        if (groups_a.empty() || groups_a.size() != groups_b.size())
            throw std::invalid_argument("min-rep: need r groups on each side");
        const int s = sigma();
        if (s < 1) throw std::invalid_argument("min-rep: empty group");
        for (const auto* side : {&groups_a, &groups_b}) {
            std::vector<bool> seen(static_cast<size_t>(side_size()), false);
            for (const auto& grp : *side) {
                if (static_cast<int>(grp.size()) != s)
                    throw std::invalid_argument("min-rep: groups must all have size sigma");
                for (int v : grp) {
                    if (v < 0 || v >= side_size() || seen[static_cast<size_t>(v)])
                        throw std::invalid_argument("min-rep: groups must partition the side");
                    seen[static_cast<size_t>(v)] = true;
                }
            }
        }
        if (edges.empty()) throw std::invalid_argument("min-rep: no bipartite edges");
        for (const auto& [a, b] : edges)
            if (a < 0 || a >= side_size() || b < 0 || b >= side_size())
                throw std::invalid_argument("min-rep: edge endpoint out of range");
    }

    int group_of_a(int a) const { return group_of(groups_a, a); }
    int group_of_b(int b) const { return group_of(groups_b, b); }

    // Condensed adjacency: groups (i,j) joined by at least one bipartite edge.
    std::vector<std::vector<bool>> condensed() const {
        std::vector<std::vector<bool>> adj(static_cast<size_t>(r()),
                                           std::vector<bool>(static_cast<size_t>(r()), false));
        for (const auto& [a, b] : edges)
            adj[static_cast<size_t>(group_of_a(a))][static_cast<size_t>(group_of_b(b))] = true;
        return adj;
    }

private:
    static int group_of(const std::vector<std::vector<int>>& groups, int v) {
        for (size_t i = 0; i < groups.size(); ++i)
            for (int u : groups[i])
                if (u == v) return static_cast<int>(i);
        throw std::invalid_argument("min-rep: vertex not in any group");
    }
};

// A generated hardness-reduction instance: the gadget graph, a role tag per
// vertex, the replication parameter x, the age/diameter parameter, and the
// embedded source instance the witness constructions refer back to.
struct ReductionArtifacts {
    Graph graph;
    std::vector<std::string> roles;
    long long x = 0;
    int param = 0;  // a for MAL reductions, d for DCSS reductions
    std::optional<SetCoverInstance> sc;
    std::optional<MinRepInstance> mr;
};

namespace detail {

// Vertex layout of the Set-Cover -> MAL(a=2) gadget.
// Blocks, in order: U, C, T = {t1,t2,t3}, W (x vertices).
struct Mal2Layout {
    int eta, mu, x;
    explicit Mal2Layout(const SetCoverInstance& sc)
        : eta(sc.eta()), mu(sc.mu()), x(sc.eta() + sc.mu() + 1) {}
    int u(int i) const { return i; }
    int s(int j) const { return eta + j; }
    int t(int k) const { return eta + mu + k; }  // k in 0..2 for t1..t3
    int w(int l) const { return eta + mu + 3 + l; }
    int total() const { return eta + mu + 3 + x; }
};

// Vertex layout of the Set-Cover -> DCSS(d) gadget.
// Blocks, in order: T (x vertices), C, U_0..U_{d-2}, Z = {z_0..z_{d-2}}, w.
struct ScDcssLayout {
    int eta, mu, d;
    long long x;
    ScDcssLayout(const SetCoverInstance& sc, int d_, long long x_)
        : eta(sc.eta()), mu(sc.mu()), d(d_), x(x_) {}
    int t(long long l) const { return static_cast<int>(l); }
    int s(int j) const { return static_cast<int>(x) + j; }
    int u(int i, int j) const { return static_cast<int>(x) + mu + j * eta + i; }  // copy j of u_i
    int z(int q) const { return static_cast<int>(x) + mu + (d - 1) * eta + q; }
    int w() const { return static_cast<int>(x) + mu + (d - 1) * eta + (d - 1); }
    int w_level() const { return (d - 2) / 2; }  // w attaches at U_c and z_c
    int total() const { return w() + 1; }
};

// Vertex layout of the MIN-REP -> DCSS(3) gadget.
// Blocks, in order: A, B, V^L (x copies per A-group), V^R, S (2r), t.
struct MinRepLayout {
    int r, sigma, x;
    explicit MinRepLayout(const MinRepInstance& mr)
        : r(mr.r()), sigma(mr.sigma()), x(mr.r() * mr.sigma()) {}
    int a(int id) const { return id; }
    int b(int id) const { return r * sigma + id; }
    int copy_a(int group, int c) const { return 2 * r * sigma + group * x + c; }
    int copy_b(int group, int c) const { return 2 * r * sigma + r * x + group * x + c; }
    int s_a(int group) const { return 2 * r * sigma + 2 * r * x + group; }
    int s_b(int group) const { return 2 * r * sigma + 2 * r * x + r + group; }
    int t() const { return 2 * r * sigma + 2 * r * x + 2 * r; }
    int total() const { return t() + 1; }
};

inline void assert_diameter(const Graph& g, int expected, const char* who) {
    if (metrics(g).diameter != expected)
        throw std::logic_error(std::string(who) + ": constructed gadget has the wrong diameter");
}

}  // namespace detail

// Figure-3 gadget: Set Cover -> MAL with a = 2 and x = eta + mu + 1.
// Edge families: E_sc (element-set incidences), E_t1 (t1 to U, C, t2),
// E_t3 (t3 to W, C, t2), E_ws (complete W x C). The result has diameter 2.
inline ReductionArtifacts sc_to_mal2(const SetCoverInstance& sc) {
    sc.validate();
    detail::Mal2Layout L(sc);
    Graph g(L.total());
    for (int j = 0; j < L.mu; ++j)
        for (int e : sc.sets[static_cast<size_t>(j)]) g.add_edge(L.u(e), L.s(j));
    for (int i = 0; i < L.eta; ++i) g.add_edge(L.t(0), L.u(i));
    for (int j = 0; j < L.mu; ++j) g.add_edge(L.t(0), L.s(j));
    g.add_edge(L.t(0), L.t(1));
    for (int l = 0; l < L.x; ++l) g.add_edge(L.t(2), L.w(l));
    for (int j = 0; j < L.mu; ++j) g.add_edge(L.t(2), L.s(j));
    g.add_edge(L.t(2), L.t(1));
    for (int l = 0; l < L.x; ++l)
        for (int j = 0; j < L.mu; ++j) g.add_edge(L.w(l), L.s(j));

    ReductionArtifacts art;
    art.graph = std::move(g);
    art.x = L.x;
    art.param = 2;
    art.sc = sc;
    art.roles.resize(static_cast<size_t>(L.total()));
    for (int i = 0; i < L.eta; ++i) art.roles[static_cast<size_t>(L.u(i))] = "u_" + std::to_string(i + 1);
    for (int j = 0; j < L.mu; ++j) art.roles[static_cast<size_t>(L.s(j))] = "s_" + std::to_string(j + 1);
    for (int k = 0; k < 3; ++k) art.roles[static_cast<size_t>(L.t(k))] = "t_" + std::to_string(k + 1);
    for (int l = 0; l < L.x; ++l) art.roles[static_cast<size_t>(L.w(l))] = "w_" + std::to_string(l + 1);
    detail::assert_diameter(art.graph, 2, "sc_to_mal2");
    return art;
}

// The Lemma-4 feasible labeling built from a set cover: {1,2} on all
// t1/t3 edges, on one covering edge per element, and on every edge from W to
// a cover set. Exactly 4(eta+mu+1) + 2x + 2x|cover| labels, feasible at age 2.
inline Labeling witness_mal2(const ReductionArtifacts& art, const std::vector<int>& cover) {
    if (!art.sc || art.param != 2)
        throw std::invalid_argument("witness_mal2: artifacts are not a Set-Cover->MAL gadget");
    const auto& sc = *art.sc;
    if (!sc.is_cover(cover)) throw std::invalid_argument("witness_mal2: not a valid set cover");
    detail::Mal2Layout L(sc);
    std::set<int> chosen(cover.begin(), cover.end());

    Labeling lambda;
    auto add12 = [&](int u, int v) {
        lambda.add(art.graph, u, v, 1);
        lambda.add(art.graph, u, v, 2);
    };
    for (int i = 0; i < L.eta; ++i) add12(L.t(0), L.u(i));
    for (int j = 0; j < L.mu; ++j) add12(L.t(0), L.s(j));
    add12(L.t(0), L.t(1));
    for (int l = 0; l < L.x; ++l) add12(L.t(2), L.w(l));
    for (int j = 0; j < L.mu; ++j) add12(L.t(2), L.s(j));
    add12(L.t(2), L.t(1));
    for (int i = 0; i < L.eta; ++i) {
        for (int j : chosen) {
            const auto& members = sc.sets[static_cast<size_t>(j)];
            if (std::find(members.begin(), members.end(), i) != members.end()) {
                add12(L.u(i), L.s(j));  // lowest-index covering set in the cover
                break;
            }
        }
    }
    for (int l = 0; l < L.x; ++l)
        for (int j : chosen) add12(L.w(l), L.s(j));
    return lambda;
}

// Figure-4 gadget: Set Cover -> DCSS for odd d >= 3; x defaults to eta*d+mu.
// Each element gets a path of d-1 copies; z_0..z_{d-2} mirror that path below
// the sets; w bridges the two halves at level floor((d-2)/2); x terminals
// T all attach to every set.
inline ReductionArtifacts sc_to_dcss(const SetCoverInstance& sc, int d,
                                     std::optional<long long> x_override = std::nullopt) {
    sc.validate();
    if (d < 3) throw std::invalid_argument("sc_to_dcss: d must be >= 3");
    if (d % 2 == 0)
        throw std::invalid_argument("sc_to_dcss: even d is not supported by this construction");
    const long long x = x_override.value_or(static_cast<long long>(sc.eta()) * d + sc.mu());
    if (x < 1) throw std::invalid_argument("sc_to_dcss: x must be >= 1");
    detail::ScDcssLayout L(sc, d, x);
    Graph g(L.total());
    for (int j = 0; j < L.mu; ++j)
        for (int e : sc.sets[static_cast<size_t>(j)]) g.add_edge(L.s(j), L.u(e, 0));
    for (long long l = 0; l < x; ++l)
        for (int j = 0; j < L.mu; ++j) g.add_edge(L.t(l), L.s(j));
    for (int i = 0; i < L.eta; ++i)
        for (int q = 0; q + 1 <= d - 2; ++q) g.add_edge(L.u(i, q), L.u(i, q + 1));
    for (int i = 0; i < L.eta; ++i) g.add_edge(L.z(d - 2), L.u(i, d - 2));
    for (int j = 0; j < L.mu; ++j) g.add_edge(L.z(0), L.s(j));
    for (int q = 0; q + 1 <= d - 2; ++q) g.add_edge(L.z(q), L.z(q + 1));
    for (int i = 0; i < L.eta; ++i) g.add_edge(L.w(), L.u(i, L.w_level()));
    g.add_edge(L.w(), L.z(L.w_level()));

    ReductionArtifacts art;
    art.graph = std::move(g);
    art.x = x;
    art.param = d;
    art.sc = sc;
    art.roles.resize(static_cast<size_t>(L.total()));
    for (long long l = 0; l < x; ++l)
        art.roles[static_cast<size_t>(L.t(l))] = "t_" + std::to_string(l + 1);
    for (int j = 0; j < L.mu; ++j)
        art.roles[static_cast<size_t>(L.s(j))] = "s_" + std::to_string(j + 1);
    for (int i = 0; i < L.eta; ++i)
        for (int q = 0; q <= d - 2; ++q)
            art.roles[static_cast<size_t>(L.u(i, q))] =
                "u_" + std::to_string(i + 1) + "_" + std::to_string(q);
    for (int q = 0; q <= d - 2; ++q)
        art.roles[static_cast<size_t>(L.z(q))] = "z_" + std::to_string(q);
    art.roles[static_cast<size_t>(L.w())] = "w";
    detail::assert_diameter(art.graph, d, "sc_to_dcss");
    return art;
}

// The Lemma-8 feasible subgraph built from a set cover: the structural edge
// families, every (t_l, s) edge into the cover, and one covering edge per
// element. The (w, z_c) edge is included only at d = 3, where it is
// unavoidable; for d >= 5 the remaining edges already give diameter <= d and
// the count meets eta(d+1) + x|cover| + mu + d - 2 exactly. At d = 3 the
// general count is one above that, except when the cover contains a set
// covering the whole universe, where a slimmer attachment scheme applies.
inline Graph witness_dcss(const ReductionArtifacts& art, const std::vector<int>& cover) {
    if (!art.sc || art.param < 3)
        throw std::invalid_argument("witness_dcss: artifacts are not a Set-Cover->DCSS gadget");
    const auto& sc = *art.sc;
    if (!sc.is_cover(cover)) throw std::invalid_argument("witness_dcss: not a valid set cover");
    const int d = art.param;
    detail::ScDcssLayout L(sc, d, art.x);
    std::set<int> chosen(cover.begin(), cover.end());

    auto covering_set = [&](int element) {
        for (int j : chosen) {
            const auto& members = sc.sets[static_cast<size_t>(j)];
            if (std::find(members.begin(), members.end(), element) != members.end()) return j;
        }
        throw std::logic_error("witness_dcss: cover lost an element");
    };
    std::optional<int> universal;
    for (int j : chosen) {
        std::set<int> members(sc.sets[static_cast<size_t>(j)].begin(),
                              sc.sets[static_cast<size_t>(j)].end());
        if (static_cast<int>(members.size()) == L.eta) {
            universal = j;
            break;
        }
    }

    Graph h(L.total());
    for (int i = 0; i < L.eta; ++i)
        for (int q = 0; q + 1 <= d - 2; ++q) h.add_edge(L.u(i, q), L.u(i, q + 1));
    for (int i = 0; i < L.eta; ++i) h.add_edge(L.z(d - 2), L.u(i, d - 2));
    for (int j = 0; j < L.mu; ++j) h.add_edge(L.z(0), L.s(j));
    for (int q = 0; q + 1 <= d - 2; ++q) h.add_edge(L.z(q), L.z(q + 1));
    for (long long l = 0; l < art.x; ++l)
        for (int j : chosen) h.add_edge(L.t(l), L.s(j));
    if (d == 3 && universal) {
        // Slim scheme: the universal set is the hub for all element copies
        // and w hangs off z_0, saving the per-element w edges.
        for (int i = 0; i < L.eta; ++i) h.add_edge(L.s(*universal), L.u(i, 0));
        h.add_edge(L.w(), L.z(L.w_level()));
    } else {
        for (int i = 0; i < L.eta; ++i) h.add_edge(L.s(covering_set(i)), L.u(i, 0));
        for (int i = 0; i < L.eta; ++i) h.add_edge(L.w(), L.u(i, L.w_level()));
        if (d == 3) h.add_edge(L.w(), L.z(L.w_level()));
    }
    if (metrics(h).diameter > d)
        throw std::logic_error("witness_dcss: witness violates the diameter bound");
    return h;
}

// Figure-5 gadget: MIN-REP -> DCSS with d = 3 and x = r*sigma. Condensed
// vertices are replicated x times; each copy attaches to its whole group and
// to its S-vertex; S-vertices of condensed-nonadjacent pairs are joined; the
// star vertex t attaches to A, B, and S.
inline ReductionArtifacts minrep_to_dcss3(const MinRepInstance& mr) {
    mr.validate();
    detail::MinRepLayout L(mr);
    auto condensed = mr.condensed();
    Graph g(L.total());
    for (const auto& [a, b] : mr.edges)
        if (!g.has_edge(L.a(a), L.b(b))) g.add_edge(L.a(a), L.b(b));
    for (int i = 0; i < L.r; ++i) {
        for (int c = 0; c < L.x; ++c) {
            for (int v : mr.groups_a[static_cast<size_t>(i)]) g.add_edge(L.copy_a(i, c), L.a(v));
            for (int v : mr.groups_b[static_cast<size_t>(i)]) g.add_edge(L.copy_b(i, c), L.b(v));
            g.add_edge(L.copy_a(i, c), L.s_a(i));
            g.add_edge(L.copy_b(i, c), L.s_b(i));
        }
    }
    for (int i = 0; i < L.r; ++i)
        for (int j = i + 1; j < L.r; ++j) {
            g.add_edge(L.s_a(i), L.s_a(j));
            g.add_edge(L.s_b(i), L.s_b(j));
        }
    for (int i = 0; i < L.r; ++i)
        for (int j = 0; j < L.r; ++j)
            if (!condensed[static_cast<size_t>(i)][static_cast<size_t>(j)])
                g.add_edge(L.s_a(i), L.s_b(j));
    for (int v = 0; v < L.r * L.sigma; ++v) {
        g.add_edge(L.t(), L.a(v));
        g.add_edge(L.t(), L.b(v));
    }
    for (int i = 0; i < L.r; ++i) {
        g.add_edge(L.t(), L.s_a(i));
        g.add_edge(L.t(), L.s_b(i));
    }

    ReductionArtifacts art;
    art.graph = std::move(g);
    art.x = L.x;
    art.param = 3;
    art.mr = mr;
    art.roles.resize(static_cast<size_t>(L.total()));
    for (int v = 0; v < L.r * L.sigma; ++v) {
        art.roles[static_cast<size_t>(L.a(v))] = "a_" + std::to_string(v + 1);
        art.roles[static_cast<size_t>(L.b(v))] = "b_" + std::to_string(v + 1);
    }
    for (int i = 0; i < L.r; ++i)
        for (int c = 0; c < L.x; ++c) {
            art.roles[static_cast<size_t>(L.copy_a(i, c))] =
                "vl_" + std::to_string(i + 1) + "_" + std::to_string(c + 1);
            art.roles[static_cast<size_t>(L.copy_b(i, c))] =
                "vr_" + std::to_string(i + 1) + "_" + std::to_string(c + 1);
        }
    for (int i = 0; i < L.r; ++i) {
        art.roles[static_cast<size_t>(L.s_a(i))] = "sa_" + std::to_string(i + 1);
        art.roles[static_cast<size_t>(L.s_b(i))] = "sb_" + std::to_string(i + 1);
    }
    art.roles[static_cast<size_t>(L.t())] = "t";
    detail::assert_diameter(art.graph, 3, "minrep_to_dcss3");
    return art;
}

// The Lemma-11 feasible subgraph built from a one-vertex-per-group REP-cover:
// star, S-S, and copy-S edges, one group edge per copy (to the group's
// representative), and the representative edge of every condensed edge.
// At most 4rx + 5r^2*sigma edges, diameter <= 3.
inline Graph witness_minrep(const ReductionArtifacts& art, const std::vector<int>& cover_a,
                            const std::vector<int>& cover_b) {
    if (!art.mr) throw std::invalid_argument("witness_minrep: artifacts are not a MIN-REP gadget");
    const auto& mr = *art.mr;
    detail::MinRepLayout L(mr);
    if (static_cast<int>(cover_a.size()) != L.r || static_cast<int>(cover_b.size()) != L.r)
        throw std::invalid_argument("witness_minrep: need exactly one representative per group");
    for (int i = 0; i < L.r; ++i) {
        const auto& ga = mr.groups_a[static_cast<size_t>(i)];
        const auto& gb = mr.groups_b[static_cast<size_t>(i)];
        if (std::find(ga.begin(), ga.end(), cover_a[static_cast<size_t>(i)]) == ga.end() ||
            std::find(gb.begin(), gb.end(), cover_b[static_cast<size_t>(i)]) == gb.end())
            throw std::invalid_argument("witness_minrep: representative outside its group");
    }
    auto condensed = mr.condensed();
    std::set<std::pair<int, int>> edge_set(mr.edges.begin(), mr.edges.end());
    for (int i = 0; i < L.r; ++i)
        for (int j = 0; j < L.r; ++j)
            if (condensed[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
                !edge_set.count({cover_a[static_cast<size_t>(i)], cover_b[static_cast<size_t>(j)]}))
                throw std::invalid_argument("witness_minrep: representatives miss a condensed edge");

    Graph h(L.total());
    for (int v = 0; v < L.r * L.sigma; ++v) {
        h.add_edge(L.t(), L.a(v));
        h.add_edge(L.t(), L.b(v));
    }
    for (int i = 0; i < L.r; ++i) {
        h.add_edge(L.t(), L.s_a(i));
        h.add_edge(L.t(), L.s_b(i));
    }
    for (int i = 0; i < L.r; ++i)
        for (int j = i + 1; j < L.r; ++j) {
            h.add_edge(L.s_a(i), L.s_a(j));
            h.add_edge(L.s_b(i), L.s_b(j));
        }
    for (int i = 0; i < L.r; ++i)
        for (int j = 0; j < L.r; ++j)
            if (!condensed[static_cast<size_t>(i)][static_cast<size_t>(j)])
                h.add_edge(L.s_a(i), L.s_b(j));
    for (int i = 0; i < L.r; ++i)
        for (int c = 0; c < L.x; ++c) {
            h.add_edge(L.copy_a(i, c), L.s_a(i));
            h.add_edge(L.copy_b(i, c), L.s_b(i));
            h.add_edge(L.copy_a(i, c), L.a(cover_a[static_cast<size_t>(i)]));
            h.add_edge(L.copy_b(i, c), L.b(cover_b[static_cast<size_t>(i)]));
        }
    for (int i = 0; i < L.r; ++i)
        for (int j = 0; j < L.r; ++j)
            if (condensed[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                int a = L.a(cover_a[static_cast<size_t>(i)]);
                int b = L.b(cover_b[static_cast<size_t>(j)]);
                if (!h.has_edge(a, b)) h.add_edge(a, b);
            }
    if (metrics(h).diameter > 3)
        throw std::logic_error("witness_minrep: witness violates the diameter bound");
    return h;
}

}  // namespace mal
