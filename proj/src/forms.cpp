#include "reeder/forms.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

namespace reeder {

namespace {

// ceil(a/2) for a >= 0
std::uint64_t ce2(long a) { return static_cast<std::uint64_t>((a + 1) / 2); }

int single_twist_vertex(const RealFormSpec& spec) {
    if (spec.coloring == 0)
        return 0;
    if (std::popcount(spec.coloring) != 1)
        throw UnsupportedError("no stated count for colorings with several black vertices");
    return std::countr_zero(spec.coloring) + 1;
}

} // namespace

KacCheck validate_kac(const KacDiagram& kd) {
    const int n = kd.ext.n();
    if (static_cast<int>(kd.nu.size()) != n + 1)
        return {false, "label vector must have one entry per vertex 0..n"};
    int sum = 0;
    std::vector<int> black;
    for (int j = 0; j <= n; ++j) {
        if (kd.nu[static_cast<size_t>(j)] != 0 && kd.nu[static_cast<size_t>(j)] != 1)
            return {false, "labels must be 0 or 1"};
        if (kd.nu[static_cast<size_t>(j)]) {
            black.push_back(j);
            sum += kd.ext.marks(j);
        }
    }
    if (sum != 2)
        return {false, "weighted black sum is " + std::to_string(sum) + ", need 2"};
    if (black.size() == 1 && black[0] != 0)
        return {true, ""};
    if (black.size() == 2 && black[0] == 0)
        return {true, ""};
    return {false, "black set must be {i} with i != 0 or {0, i}"};
}

std::pair<DynkinDiagram, Coloring> kac_to_twisting(const KacDiagram& kd) {
    const KacCheck chk = validate_kac(kd);
    if (!chk.ok)
        throw ArgumentError("invalid affine labels: " + chk.diagnostic);
    const int n = kd.ext.n();
    Coloring t = 0;
    for (int j = 1; j <= n; ++j)
        if (kd.nu[static_cast<size_t>(j)])
            t |= vertex_bit(j);
    return {kd.ext.base, t};
}

RealFormSpec make_form(DynkinType t, DiagramAutomorphism tau, Coloring coloring,
                       std::string display_name, std::optional<std::vector<int>> kac_nu) {
    const DynkinDiagram d = build_diagram(t);
    const int n = d.n();
    if (static_cast<int>(tau.perm.size()) != n)
        throw ArgumentError("symmetry size does not match rank");
    for (int i = 1; i <= n; ++i) {
        const int ti = tau.image(i);
        if (ti < 1 || ti > n || tau.image(ti) != i)
            throw ArgumentError("symmetry must be an involutive permutation");
        for (int k = 1; k <= n; ++k)
            if (d.entry(tau.image(i), tau.image(k)) != d.entry(i, k))
                throw ArgumentError("permutation does not preserve the diagram");
    }
    if (n < max_board_size && (coloring >> n) != 0)
        throw ArgumentError("coloring does not fit the diagram");
    if (!tau.is_identity())
        for (int i = 1; i <= n; ++i)
            if (get_vertex(coloring, i) && tau.image(i) != i)
                throw ArgumentError("twist bits of a twisted form must sit on fixed vertices");

    RealFormSpec spec;
    spec.dtype = t;
    spec.tau = std::move(tau);
    spec.coloring = coloring;
    spec.display_name = std::move(display_name);
    spec.kac_nu = std::move(kac_nu);
    return spec;
}

RealFormSpec make_inner_form(DynkinType t, int twist_vertex, std::string display_name,
                             std::optional<std::vector<int>> kac_nu) {
    const int n = t.rank;
    if (twist_vertex < 0 || twist_vertex > n)
        throw ArgumentError("twist vertex out of range");
    std::vector<int> id(static_cast<size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    const Coloring c = twist_vertex == 0 ? 0 : vertex_bit(twist_vertex);
    if (!kac_nu && twist_vertex > 0) {
        // Affine labels are forced by the mark at the twist vertex.
        const ExtendedDiagram ext = extend(build_diagram(t));
        const int mark = ext.marks(twist_vertex);
        if (mark == 1 || mark == 2) {
            std::vector<int> nu(static_cast<size_t>(n) + 1, 0);
            nu[static_cast<size_t>(twist_vertex)] = 1;
            if (mark == 1)
                nu[0] = 1;
            kac_nu = std::move(nu);
        }
    }
    return make_form(t, DiagramAutomorphism{std::move(id)}, c, std::move(display_name),
                     std::move(kac_nu));
}

std::vector<int> fixed_vertices(const RealFormSpec& spec) {
    std::vector<int> out;
    for (int i = 1; i <= spec.dtype.rank; ++i)
        if (spec.tau.image(i) == i)
            out.push_back(i);
    return out;
}

Labeling ReducedPuzzle::lift(Labeling reduced) const {
    Labeling a = 0;
    for (int q = 1; q <= instance.n; ++q)
        if (get_vertex(reduced, q))
            a |= vertex_bit(vertex_of[static_cast<size_t>(q) - 1]);
    return a;
}

ReducedPuzzle reduce_outer(const RealFormSpec& spec) {
    const DynkinDiagram d = build_diagram(spec.dtype);
    const std::vector<int> fixed = fixed_vertices(spec);
    const int r = static_cast<int>(fixed.size());

    Eigen::MatrixXi pairing(r, r);
    Labeling coloring = 0;
    for (int q = 1; q <= r; ++q) {
        const int v = fixed[static_cast<size_t>(q) - 1];
        for (int w = 1; w <= r; ++w)
            pairing(q - 1, w - 1) = d.entry(v, fixed[static_cast<size_t>(w) - 1]);
        if (get_vertex(spec.coloring, v))
            coloring |= vertex_bit(q);
    }

    std::vector<BoardComponent> comps;
    if (r > 0) {
        std::vector<int> pos_of(static_cast<size_t>(d.n()) + 1, 0);
        for (int q = 1; q <= r; ++q)
            pos_of[static_cast<size_t>(fixed[static_cast<size_t>(q) - 1])] = q;
        for (const ClassifiedComponent& c : subdiagram(extend(d), fixed)) {
            BoardComponent bc;
            bc.type = c.type;
            for (int v : c.canon_to_ambient)
                bc.positions.push_back(pos_of[static_cast<size_t>(v)]);
            comps.push_back(std::move(bc));
        }
    }

    ReducedPuzzle rp;
    rp.instance = make_instance(std::move(pairing), coloring, fixed, std::move(comps));
    rp.vertex_of = fixed;
    rp.ambient_n = d.n();
    return rp;
}

std::uint64_t h1_cardinality(const RealFormSpec& spec, int cap) {
    return enumerate_orbits(reduce_outer(spec).instance, cap).class_count();
}

std::vector<Labeling> h1_representatives(const RealFormSpec& spec, int cap) {
    const ReducedPuzzle rp = reduce_outer(spec);
    const OrbitDecomposition dec = enumerate_orbits(rp.instance, cap);
    std::vector<Labeling> out;
    for (Labeling rep : dec.reps)
        out.push_back(rp.lift(rep));
    return out;
}

namespace {

std::uint64_t closed_form_inner(const DynkinType& t, int m) {
    const int n = t.rank;
    const int k = n / 2;
    switch (t.series) {
    case Series::A:
        if (m == 0)
            return ce2(n) + 1;
        return ce2(m - 1) + 1 + ce2(n - m);
    case Series::B:
        if (m == 0)
            return ce2(n - 1) + 2;
        if (m == n)
            return n % 2 == 0 ? static_cast<std::uint64_t>(k + 2)
                              : static_cast<std::uint64_t>(k + 1);
        if (n % 2 == 0)
            return m % 2 == 1 ? static_cast<std::uint64_t>(k)
                              : static_cast<std::uint64_t>(k + 2);
        return m % 2 == 1 ? static_cast<std::uint64_t>(k + 1)
                          : static_cast<std::uint64_t>(k + 2);
    case Series::C:
        return m == n ? 1 : static_cast<std::uint64_t>(n) + 1;
    case Series::D: {
        if (m == n - 1)
            m = n; // leaf swap symmetry
        if (m == 0)
            return n % 2 == 0 ? static_cast<std::uint64_t>(k + 3)
                              : static_cast<std::uint64_t>(k + 2);
        if (m == n)
            return 2;
        if (m > n / 2)
            break; // no stated formula past the middle vertex
        if (n % 2 == 1)
            return static_cast<std::uint64_t>(k + 2);
        return m % 2 == 1 ? static_cast<std::uint64_t>(k)
                          : static_cast<std::uint64_t>(k + 3);
    }
    case Series::E:
        if (n == 6) {
            if (m == 4)
                m = 2; // flip symmetry
            if (m == 5)
                m = 1;
            if (m == 0 || m == 1 || m == 2)
                return 3;
        } else if (n == 7) {
            if (m == 0 || m == 2)
                return 4;
            if (m == 1 || m == 7)
                return 2;
        } else {
            if (m == 0 || m == 1 || m == 7)
                return 3;
        }
        break;
    case Series::F:
        if (m == 0 || m == 1 || m == 4)
            return 3;
        break;
    case Series::G:
        if (m == 0 || m == 2)
            return 2;
        break;
    }
    throw UnsupportedError("no stated count for " + type_name(t) + " twisted at vertex " +
                           std::to_string(m));
}

std::uint64_t closed_form_outer(const DynkinType& t, int m) {
    const int n = t.rank;
    switch (t.series) {
    case Series::A:
        if (n % 2 == 0)
            return 1; // empty fixed set
        if (m == 0)
            return 2;
        if (m == (n + 1) / 2)
            return 1;
        break;
    case Series::D:
        if (m == 0)
            return ce2(n - 2) + 1;
        if (m >= 1 && m <= n - 2)
            return ce2(m - 1) + 1 + ce2(n - 2 - m);
        break;
    case Series::E:
        if (m == 0 || m == 6)
            return 2;
        break;
    default:
        break;
    }
    throw UnsupportedError("no stated count for twisted " + type_name(t) + " at vertex " +
                           std::to_string(m));
}

} // namespace

std::uint64_t closed_form_count(const RealFormSpec& spec) {
    const int m = single_twist_vertex(spec);
    return spec.inner() ? closed_form_inner(spec.dtype, m) : closed_form_outer(spec.dtype, m);
}

std::string twisting_label(const RealFormSpec& spec) {
    const int n = spec.dtype.rank;
    std::string verts;
    for (int i = 1; i <= n; ++i)
        if (get_vertex(spec.coloring, i))
            verts += (verts.empty() ? "" : ",") + std::to_string(i);
    if (verts.empty())
        verts = "0";
    return (spec.inner() ? "" : "2") + type_name(spec.dtype) + "^(" + verts + ")";
}

namespace {

DiagramAutomorphism flip_of(const DynkinType& t) {
    // For the D series (D4 has three leaf transpositions) take the one
    // swapping the two fork vertices n-1, n.
    for (const DiagramAutomorphism& a : automorphisms(build_diagram(t)))
        if (!a.is_identity() && (t.series != Series::D || a.image(t.rank) == t.rank - 1))
            return a;
    throw ArgumentError(type_name(t) + " has no nontrivial symmetry");
}

RealFormSpec outer_form(DynkinType t, int twist_vertex, std::string name) {
    const Coloring c = twist_vertex == 0 ? 0 : vertex_bit(twist_vertex);
    return make_form(t, flip_of(t), c, std::move(name));
}

long to_long(const std::string& s) {
    if (s.empty() || s.size() > 6)
        throw CatalogError("bad numeric parameter '" + s + "'");
    long v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw CatalogError("bad numeric parameter '" + s + "'");
        v = v * 10 + (ch - '0');
    }
    return v;
}

std::string join_args(long a, long b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

RealFormSpec su_form(long p, long q) {
    if (p < 1 || q < 1)
        throw CatalogError("SU(p,q) needs positive p, q");
    const long m = std::min(p, q), n = p + q - 1;
    return make_inner_form(make_type(Series::A, static_cast<int>(n)), static_cast<int>(m),
                           "SU" + join_args(m, p + q - m));
}

RealFormSpec sl_r_form(long N) {
    if (N < 2)
        throw CatalogError("SL(N,R) needs N >= 2");
    const std::string name = "SL(" + std::to_string(N) + ",R)";
    if (N == 2) // sits in the inner A1 family
        return make_inner_form(make_type(Series::A, 1), 1, name);
    const DynkinType t = make_type(Series::A, static_cast<int>(N) - 1);
    return outer_form(t, N % 2 == 0 ? static_cast<int>(N / 2) : 0, name);
}

RealFormSpec sl_h_form(long k) {
    if (k < 2)
        throw CatalogError("SL(k,H) needs k >= 2");
    return outer_form(make_type(Series::A, static_cast<int>(2 * k - 1)), 0,
                      "SL(" + std::to_string(k) + ",H)");
}

RealFormSpec spin_form(long p, long q) {
    if (p < 1 || q < 1)
        throw CatalogError("Spin(p,q) needs positive p, q");
    const long sum = p + q;
    if (sum % 2 == 1) {
        const long e = p % 2 == 0 ? p : q;
        const long n = (sum - 1) / 2, m = e / 2;
        return make_inner_form(make_type(Series::B, static_cast<int>(n)), static_cast<int>(m),
                               "Spin" + join_args(e, sum - e));
    }
    const long n = sum / 2;
    if (p % 2 == 0) {
        const long m = std::min(p, q) / 2;
        return make_inner_form(make_type(Series::D, static_cast<int>(n)), static_cast<int>(m),
                               "Spin" + join_args(2 * m, sum - 2 * m));
    }
    const long m = (std::min(p, q) - 1) / 2;
    return outer_form(make_type(Series::D, static_cast<int>(n)), static_cast<int>(m),
                      "Spin" + join_args(2 * m + 1, sum - 2 * m - 1));
}

RealFormSpec spin_star_form(long arg) {
    if (arg % 2 != 0)
        throw CatalogError("SpinStar takes an even argument");
    const long n = arg / 2;
    return make_inner_form(make_type(Series::D, static_cast<int>(n)), static_cast<int>(n),
                           "SpinStar(" + std::to_string(arg) + ")");
}

RealFormSpec sp_form(long p, long q) {
    if (p < 1 || q < 1)
        throw CatalogError("Sp(p,q) needs positive p, q");
    const long m = std::min(p, q), n = p + q;
    return make_inner_form(make_type(Series::C, static_cast<int>(n)), static_cast<int>(m),
                           "Sp" + join_args(m, n - m));
}

RealFormSpec sp_r_form(long arg) {
    if (arg % 2 != 0)
        throw CatalogError("SpR takes an even argument");
    const long n = arg / 2;
    return make_inner_form(make_type(Series::C, static_cast<int>(n)), static_cast<int>(n),
                           "SpR(" + std::to_string(arg) + ")");
}

RealFormSpec compact_form(const DynkinType& t) {
    std::string name;
    switch (t.series) {
    case Series::A: name = "SU(" + std::to_string(t.rank + 1) + ")"; break;
    case Series::B: name = "Spin(" + std::to_string(2 * t.rank + 1) + ")"; break;
    case Series::C: name = "Sp(" + std::to_string(t.rank) + ")"; break;
    case Series::D: name = "Spin(" + std::to_string(2 * t.rank) + ")"; break;
    default: name = type_name(t); break;
    }
    return make_inner_form(t, 0, std::move(name));
}

RealFormSpec exceptional_by_name(const std::string& name) {
    if (name == "EI")
        return outer_form(make_type(Series::E, 6), 6, "EI");
    if (name == "EII")
        return make_inner_form(make_type(Series::E, 6), 2, "EII");
    if (name == "EIII")
        return make_inner_form(make_type(Series::E, 6), 1, "EIII");
    if (name == "EIV")
        return outer_form(make_type(Series::E, 6), 0, "EIV");
    if (name == "EV")
        return make_inner_form(make_type(Series::E, 7), 7, "EV");
    if (name == "EVI")
        return make_inner_form(make_type(Series::E, 7), 2, "EVI");
    if (name == "EVII")
        return make_inner_form(make_type(Series::E, 7), 1, "EVII");
    if (name == "EVIII")
        return make_inner_form(make_type(Series::E, 8), 7, "EVIII");
    if (name == "EIX")
        return make_inner_form(make_type(Series::E, 8), 1, "EIX");
    if (name == "FI")
        return make_inner_form(make_type(Series::F, 4), 4, "FI");
    if (name == "FII")
        return make_inner_form(make_type(Series::F, 4), 1, "FII");
    if (name == "G2split")
        return make_inner_form(make_type(Series::G, 2), 2, "G2split");
    if (name == "G2compact")
        return compact_form(make_type(Series::G, 2));
    throw CatalogError("unknown form name '" + name + "'");
}

} // namespace

RealFormSpec named_form(const std::string& raw) {
    std::string name;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)))
            name += c;
    if (name.empty())
        throw CatalogError("empty form name");

    const size_t open = name.find('(');
    if (open == std::string::npos) {
        // Compact exceptional types by type string, or an exceptional label.
        if (name == "E6" || name == "E7" || name == "E8" || name == "F4" || name == "G2")
            return compact_form(parse_type(name));
        return exceptional_by_name(name);
    }
    if (name.back() != ')')
        throw CatalogError("cannot parse form name '" + raw + "'");
    const std::string head = name.substr(0, open);
    std::vector<std::string> args;
    std::string cur;
    for (size_t i = open + 1; i + 1 < name.size(); ++i) {
        if (name[i] == ',') {
            args.push_back(cur);
            cur.clear();
        } else {
            cur += name[i];
        }
    }
    args.push_back(cur);

    if (head == "SU" && args.size() == 1) {
        const long k = to_long(args[0]);
        if (k < 2)
            throw CatalogError("SU(k) needs k >= 2");
        return compact_form(make_type(Series::A, static_cast<int>(k) - 1));
    }
    if (head == "SU" && args.size() == 2)
        return su_form(to_long(args[0]), to_long(args[1]));
    if (head == "SL" && args.size() == 2 && args[1] == "R")
        return sl_r_form(to_long(args[0]));
    if (head == "SL" && args.size() == 2 && args[1] == "H")
        return sl_h_form(to_long(args[0]));
    if (head == "Spin" && args.size() == 1) {
        const long k = to_long(args[0]);
        if (k >= 5 && k % 2 == 1)
            return compact_form(make_type(Series::B, static_cast<int>((k - 1) / 2)));
        if (k >= 8 && k % 2 == 0)
            return compact_form(make_type(Series::D, static_cast<int>(k / 2)));
        throw CatalogError("Spin(k) needs odd k >= 5 or even k >= 8");
    }
    if (head == "Spin" && args.size() == 2)
        return spin_form(to_long(args[0]), to_long(args[1]));
    if ((head == "Spin*" || head == "SpinStar") && args.size() == 1)
        return spin_star_form(to_long(args[0]));
    if (head == "Sp" && args.size() == 1) {
        const long k = to_long(args[0]);
        return compact_form(make_type(Series::C, static_cast<int>(k)));
    }
    if (head == "Sp" && args.size() == 2 && args[1] == "R")
        return sp_r_form(to_long(args[0]));
    if (head == "Sp" && args.size() == 2)
        return sp_form(to_long(args[0]), to_long(args[1]));
    if (head == "SpR" && args.size() == 1)
        return sp_r_form(to_long(args[0]));
    throw CatalogError("cannot parse form name '" + raw + "'");
}

std::vector<RealFormSpec> catalog_forms(int max_classical_rank) {
    const int R = max_classical_rank;
    if (R < 4)
        throw ArgumentError("catalog rank bound must be at least 4");
    std::vector<RealFormSpec> out;

    for (int n = 1; n <= R; ++n) {
        out.push_back(compact_form(make_type(Series::A, n)));
        for (int m = 1; 2 * m <= n + 1; ++m)
            out.push_back(su_form(m, n + 1 - m));
        if (n >= 2)
            out.push_back(sl_r_form(n + 1));
        if (n >= 3 && n % 2 == 1)
            out.push_back(sl_h_form((n + 1) / 2));
    }
    for (int n = 2; n <= R; ++n) {
        out.push_back(compact_form(make_type(Series::B, n)));
        for (int m = 1; m <= n; ++m)
            out.push_back(spin_form(2 * m, 2 * n + 1 - 2 * m));
    }
    for (int n = 3; n <= R; ++n) {
        out.push_back(compact_form(make_type(Series::C, n)));
        for (int m = 1; 2 * m <= n; ++m)
            out.push_back(sp_form(m, n - m));
        out.push_back(sp_r_form(2 * n));
    }
    for (int n = 4; n <= R; ++n) {
        out.push_back(compact_form(make_type(Series::D, n)));
        for (int m = 1; 2 * m <= n; ++m)
            out.push_back(spin_form(2 * m, 2 * n - 2 * m));
        out.push_back(spin_star_form(2 * n));
        for (int m = 0; 2 * m <= n - 1; ++m)
            out.push_back(spin_form(2 * m + 1, 2 * (n - m) - 1));
    }
    for (const char* name :
         {"E6", "EII", "EIII", "EIV", "EI", "E7", "EV", "EVI", "EVII", "E8", "EVIII", "EIX", "F4",
          "FI", "FII", "G2", "G2split"})
        out.push_back(named_form(name));
    return out;
}

} // namespace reeder
