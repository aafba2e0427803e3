#include "reeder/dynkin.hpp"
#include "reeder/intmath.hpp"

#include <algorithm>
#include <numeric>

namespace reeder {

namespace {

struct Edge {
    int i, k;   // vertices, 1-based
    int ik, ki; // cartan(i,k), cartan(k,i)
};

std::vector<Edge> edge_data(const DynkinType& t) {
    const int n = t.rank;
    std::vector<Edge> e;
    auto path = [&](int from, int to) {
        for (int i = from; i < to; ++i)
            e.push_back({i, i + 1, -1, -1});
    };
    switch (t.series) {
    case Series::A:
        path(1, n);
        break;
    case Series::B:
        path(1, n - 1);
        e.push_back({n - 1, n, -2, -1}); // alpha_n short
        break;
    case Series::C:
        path(1, n - 1);
        e.push_back({n - 1, n, -1, -2}); // alpha_n long
        break;
    case Series::D:
        path(1, n - 1);
        e.push_back({n - 2, n, -1, -1});
        break;
    case Series::E:
        path(1, n - 1);
        e.push_back({n - 3, n, -1, -1});
        break;
    case Series::F:
        e.push_back({1, 2, -1, -1});
        e.push_back({2, 3, -1, -2}); // 1,2 short; 3,4 long
        e.push_back({3, 4, -1, -1});
        break;
    case Series::G:
        e.push_back({1, 2, -1, -3}); // alpha_1 short
        break;
    }
    return e;
}

Eigen::VectorXi mark_data(const DynkinType& t) {
    const int n = t.rank;
    Eigen::VectorXi m = Eigen::VectorXi::Constant(n, 2);
    switch (t.series) {
    case Series::A:
        m.setOnes();
        break;
    case Series::B:
        m(0) = 1;
        break;
    case Series::C:
        m(n - 1) = 1;
        break;
    case Series::D:
        m(0) = m(n - 2) = m(n - 1) = 1;
        break;
    case Series::E:
        if (n == 6)
            m << 1, 2, 3, 2, 1, 2;
        else if (n == 7)
            m << 1, 2, 3, 4, 3, 2, 2;
        else
            m << 2, 3, 4, 5, 6, 4, 2, 3;
        break;
    case Series::F:
        m << 2, 4, 3, 2;
        break;
    case Series::G:
        m << 3, 2;
        break;
    }
    return m;
}

Eigen::VectorXi comark_data(const DynkinType& t) {
    const int n = t.rank;
    switch (t.series) {
    case Series::A:
    case Series::C:
        return Eigen::VectorXi::Ones(n);
    case Series::B: {
        Eigen::VectorXi m = Eigen::VectorXi::Constant(n, 2);
        m(0) = m(n - 1) = 1;
        return m;
    }
    case Series::F: {
        Eigen::VectorXi m(4);
        m << 1, 2, 3, 2;
        return m;
    }
    case Series::G: {
        Eigen::VectorXi m(2);
        m << 1, 2;
        return m;
    }
    default: // D, E are simply laced
        return mark_data(t);
    }
}

int vec_gcd(const Eigen::VectorXi& v) {
    int g = 0;
    for (int i = 0; i < v.size(); ++i)
        g = std::gcd(g, v(i));
    return g;
}

} // namespace

DynkinType make_type(Series series, int rank) {
    int lo = 0, hi = 0;
    switch (series) {
    case Series::A: lo = 1; hi = 63; break;
    case Series::B: lo = 2; hi = 63; break;
    case Series::C: lo = 3; hi = 63; break;
    case Series::D: lo = 4; hi = 63; break;
    case Series::E: lo = 6; hi = 8; break;
    case Series::F: lo = 4; hi = 4; break;
    case Series::G: lo = 2; hi = 2; break;
    default:
        throw ArgumentError("unknown series");
    }
    if (rank < lo || rank > hi)
        throw ArgumentError("rank " + std::to_string(rank) + " out of range for series " +
                            std::string(1, static_cast<char>(series)));
    return {series, rank};
}

DynkinType parse_type(const std::string& name) {
    if (name.size() < 2)
        throw ArgumentError("cannot parse diagram type '" + name + "'");
    const char c = name[0];
    if (c < 'A' || c > 'G')
        throw ArgumentError("cannot parse diagram type '" + name + "'");
    int rank = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9')
            throw ArgumentError("cannot parse diagram type '" + name + "'");
        rank = rank * 10 + (name[i] - '0');
        if (rank > 1000)
            break;
    }
    return make_type(static_cast<Series>(c), rank);
}

std::string type_name(const DynkinType& t) {
    return std::string(1, static_cast<char>(t.series)) + std::to_string(t.rank);
}

std::vector<int> DynkinDiagram::neighbors(int i) const {
    std::vector<int> out;
    for (int k = 1; k <= n(); ++k)
        if (adjacent(i, k))
            out.push_back(k);
    return out;
}

std::vector<int> ExtendedDiagram::neighbors(int i) const {
    std::vector<int> out;
    for (int k = 0; k <= n(); ++k)
        if (adjacent(i, k))
            out.push_back(k);
    return out;
}

DynkinDiagram build_diagram(const DynkinType& t) {
    make_type(t.series, t.rank);
    const int n = t.rank;
    DynkinDiagram d;
    d.type = t;
    d.cartan = Eigen::MatrixXi::Zero(n, n);
    d.cartan.diagonal().setConstant(2);
    for (const Edge& e : edge_data(t)) {
        d.cartan(e.i - 1, e.k - 1) = e.ik;
        d.cartan(e.k - 1, e.i - 1) = e.ki;
    }
    return d;
}

ExtendedDiagram extend(const DynkinDiagram& d) {
    const int n = d.n();
    ExtendedDiagram e;
    e.base = d;
    e.marks = Eigen::VectorXi(n + 1);
    e.comarks = Eigen::VectorXi(n + 1);
    e.marks(0) = e.comarks(0) = 1;
    e.marks.tail(n) = mark_data(d.type);
    e.comarks.tail(n) = comark_data(d.type);

    // Row and column 0 are forced by the kernel conditions.
    e.cartan = Eigen::MatrixXi::Zero(n + 1, n + 1);
    e.cartan(0, 0) = 2;
    e.cartan.bottomRightCorner(n, n) = d.cartan;
    for (int k = 1; k <= n; ++k) {
        int row = 0, col = 0;
        for (int j = 1; j <= n; ++j) {
            row += e.marks(j) * d.cartan(j - 1, k - 1);
            col += e.comarks(j) * d.cartan(k - 1, j - 1);
        }
        e.cartan(0, k) = -row;
        e.cartan(k, 0) = -col;
    }

    // The kernels are one-dimensional (the finite block is nonsingular), so
    // marks and comarks are the unique primitive positive kernel vectors.
    if (((e.marks.transpose() * e.cartan).array() != 0).any() ||
        ((e.cartan * e.comarks).array() != 0).any() || vec_gcd(e.marks) != 1 ||
        vec_gcd(e.comarks) != 1 || e.marks.minCoeff() < 1 || e.comarks.minCoeff() < 1)
        throw Error("diagram data inconsistent for " + type_name(d.type));

    // Row and column 0 are derived from the marks, so the kernel identities
    // alone cannot catch a dropped edge.  Two independent checks can: the
    // finite diagram must be connected, and its determinant must equal the
    // center order of the simply connected group.
    {
        std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
        std::vector<int> stack{1};
        seen[1] = true;
        int reached = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : d.neighbors(v))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n)
            throw Error("diagram data disconnected for " + type_name(d.type));
    }
    Int expected_det;
    switch (d.type.series) {
    case Series::A: expected_det = n + 1; break;
    case Series::B:
    case Series::C: expected_det = 2; break;
    case Series::D: expected_det = 4; break;
    case Series::E: expected_det = 9 - n; break;
    default: expected_det = 1; break; // F4, G2
    }
    if (det_bareiss(to_int_matrix(d.cartan)) != expected_det)
        throw Error("determinant mismatch for " + type_name(d.type));
    return e;
}

bool DiagramAutomorphism::is_identity() const {
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

std::vector<DiagramAutomorphism> automorphisms(const DynkinDiagram& d) {
    const int n = d.n();
    std::vector<std::vector<int>> perms;
    std::vector<int> id(static_cast<size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    perms.push_back(id);

    auto swapped = [&](std::initializer_list<std::pair<int, int>> cycles) {
        std::vector<int> p = id;
        for (auto [a, b] : cycles) {
            p[static_cast<size_t>(a) - 1] = b;
            p[static_cast<size_t>(b) - 1] = a;
        }
        return p;
    };

    switch (d.type.series) {
    case Series::A:
        if (n >= 2) {
            std::vector<int> p(static_cast<size_t>(n));
            for (int i = 1; i <= n; ++i)
                p[static_cast<size_t>(i) - 1] = n + 1 - i;
            perms.push_back(p);
        }
        break;
    case Series::D:
        if (n == 4) {
            perms.push_back(swapped({{1, 3}}));
            perms.push_back(swapped({{1, 4}}));
            perms.push_back(swapped({{3, 4}}));
        } else {
            perms.push_back(swapped({{n - 1, n}}));
        }
        break;
    case Series::E:
        if (n == 6)
            perms.push_back(swapped({{1, 5}, {2, 4}}));
        break;
    default:
        break;
    }

    std::vector<DiagramAutomorphism> out;
    for (const auto& p : perms) {
        for (int i = 1; i <= n; ++i) {
            if (p[static_cast<size_t>(p[static_cast<size_t>(i) - 1]) - 1] != i)
                throw Error("symmetry table broken for " + type_name(d.type));
            for (int k = 1; k <= n; ++k)
                if (d.entry(p[static_cast<size_t>(i) - 1], p[static_cast<size_t>(k) - 1]) !=
                    d.entry(i, k))
                    throw Error("symmetry table broken for " + type_name(d.type));
        }
        out.push_back({p});
    }
    return out;
}

namespace {

// Try to realize `cand` on the component vertices, matching canonical
// vertices 1..r in order against ascending ambient candidates.
bool match_component(const ExtendedDiagram& e, const std::vector<int>& comp,
                     const DynkinDiagram& cand, std::vector<int>& out) {
    const int r = static_cast<int>(comp.size());
    std::vector<int> assign(static_cast<size_t>(r), -1); // canonical idx -> comp idx
    std::vector<bool> used(static_cast<size_t>(r), false);

    int c = 0;
    std::vector<int> next(static_cast<size_t>(r), 0); // next comp idx to try at level c
    while (c >= 0) {
        if (c == r) {
            out.resize(static_cast<size_t>(r));
            for (int i = 0; i < r; ++i)
                out[static_cast<size_t>(i)] = comp[static_cast<size_t>(assign[static_cast<size_t>(i)])];
            return true;
        }
        bool advanced = false;
        for (int j = next[static_cast<size_t>(c)]; j < r; ++j) {
            if (used[static_cast<size_t>(j)])
                continue;
            bool ok = true;
            for (int dprev = 0; dprev < c && ok; ++dprev) {
                const int a = comp[static_cast<size_t>(assign[static_cast<size_t>(dprev)])];
                const int b = comp[static_cast<size_t>(j)];
                ok = e.entry(b, a) == cand.entry(c + 1, dprev + 1) &&
                     e.entry(a, b) == cand.entry(dprev + 1, c + 1);
            }
            if (ok) {
                assign[static_cast<size_t>(c)] = j;
                used[static_cast<size_t>(j)] = true;
                next[static_cast<size_t>(c)] = j + 1;
                ++c;
                if (c < r)
                    next[static_cast<size_t>(c)] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            --c;
            if (c >= 0)
                used[static_cast<size_t>(assign[static_cast<size_t>(c)])] = false;
        }
    }
    return false;
}

std::vector<DynkinType> candidate_types(int r) {
    std::vector<DynkinType> out;
    out.push_back({Series::A, r});
    if (r >= 2)
        out.push_back({Series::B, r});
    if (r >= 3)
        out.push_back({Series::C, r});
    if (r >= 4)
        out.push_back({Series::D, r});
    if (r >= 6 && r <= 8)
        out.push_back({Series::E, r});
    if (r == 4)
        out.push_back({Series::F, r});
    if (r == 2)
        out.push_back({Series::G, r});
    return out;
}

} // namespace

std::vector<ClassifiedComponent> subdiagram(const ExtendedDiagram& e, const std::vector<int>& S) {
    const int n = e.n();
    if (S.empty())
        return {};
    for (size_t i = 0; i < S.size(); ++i) {
        if (S[i] < 0 || S[i] > n)
            throw ArgumentError("vertex " + std::to_string(S[i]) + " out of range 0.." +
                                std::to_string(n));
        if (i > 0 && S[i] <= S[i - 1])
            throw ArgumentError("vertex set must be strictly ascending");
    }

    // Split into connected components, listed by smallest member.
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(S.size(), false);
    for (size_t s = 0; s < S.size(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> comp;
        std::vector<size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            comp.push_back(S[v]);
            for (size_t w = 0; w < S.size(); ++w)
                if (!seen[w] && e.adjacent(S[v], S[w])) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }

    std::vector<ClassifiedComponent> out;
    for (auto& comp : comps) {
        bool matched = false;
        for (const DynkinType& t : candidate_types(static_cast<int>(comp.size()))) {
            DynkinDiagram cand = build_diagram(t);
            std::vector<int> map;
            if (match_component(e, comp, cand, map)) {
                out.push_back({t, comp, std::move(map)});
                matched = true;
                break;
            }
        }
        if (!matched) {
            std::string verts;
            for (int v : comp)
                verts += (verts.empty() ? "" : ",") + std::to_string(v);
            throw UnsupportedError("component {" + verts + "} is not a finite Dynkin diagram");
        }
    }
    return out;
}

std::vector<int> to_bourbaki(const DynkinType& t) {
    switch (t.series) {
    case Series::E:
        if (t.rank == 6)
            return {1, 3, 4, 5, 6, 2};
        if (t.rank == 7)
            return {7, 6, 5, 4, 3, 1, 2};
        return {8, 7, 6, 5, 4, 3, 1, 2};
    case Series::F:
        return {4, 3, 2, 1};
    default: {
        std::vector<int> id(static_cast<size_t>(t.rank));
        std::iota(id.begin(), id.end(), 1);
        return id;
    }
    }
}

std::vector<int> from_bourbaki(const DynkinType& t) {
    const std::vector<int> fwd = to_bourbaki(t);
    std::vector<int> inv(fwd.size());
    for (size_t i = 0; i < fwd.size(); ++i)
        inv[static_cast<size_t>(fwd[i]) - 1] = static_cast<int>(i) + 1;
    return inv;
}

} // namespace reeder
