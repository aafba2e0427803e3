#include "reeder/puzzle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace reeder {

namespace {

void check_board_size(int n) {
    if (n < 0 || n > max_board_size)
        throw ArgumentError("board size " + std::to_string(n) + " out of range 0.." +
                            std::to_string(max_board_size));
}

void check_labeling(const PuzzleInstance& inst, Labeling a) {
    if (inst.n < max_board_size && (a >> inst.n) != 0)
        throw ArgumentError("labeling does not fit a board with " + std::to_string(inst.n) +
                            " vertices");
}

void check_position(const PuzzleInstance& inst, int p) {
    if (p < 1 || p > inst.n)
        throw ArgumentError("position " + std::to_string(p) + " out of range 1.." +
                            std::to_string(inst.n));
}

void check_cap(int n, int cap) {
    if (n > cap)
        throw CapError("board with " + std::to_string(n) +
                       " vertices exceeds enumeration cap " + std::to_string(cap));
}

} // namespace

std::string format_labeling(Labeling a, int n) {
    check_board_size(n);
    std::string s(static_cast<size_t>(n), '0');
    for (int p = 1; p <= n; ++p)
        if (get_vertex(a, p))
            s[static_cast<size_t>(p) - 1] = '1';
    return s;
}

Labeling parse_labeling(const std::string& s) {
    const int n = static_cast<int>(s.size());
    if (n < 1)
        throw ArgumentError("empty labeling string");
    check_board_size(n);
    Labeling a = 0;
    for (int p = 1; p <= n; ++p) {
        const char c = s[static_cast<size_t>(p) - 1];
        if (c != '0' && c != '1')
            throw ArgumentError("labeling strings use digits 0 and 1 only");
        if (c == '1')
            a |= vertex_bit(p);
    }
    return a;
}

PuzzleInstance make_instance(Eigen::MatrixXi pairing, Labeling coloring, std::vector<int> display,
                             std::vector<BoardComponent> components) {
    const int n = static_cast<int>(pairing.rows());
    check_board_size(n);
    if (pairing.cols() != n)
        throw ArgumentError("pairing matrix must be square");
    for (int i = 0; i < n; ++i) {
        if (pairing(i, i) != 2)
            throw ArgumentError("pairing diagonal must be 2");
        for (int k = 0; k < n; ++k)
            if (i != k && (pairing(i, k) > 0 || ((pairing(i, k) == 0) != (pairing(k, i) == 0))))
                throw ArgumentError("pairing off-diagonal entries must be <= 0, zeros symmetric");
    }
    if (display.empty()) {
        display.resize(static_cast<size_t>(n));
        std::iota(display.begin(), display.end(), 1);
    }
    if (static_cast<int>(display.size()) != n)
        throw ArgumentError("display list size must match board size");

    PuzzleInstance inst;
    inst.n = n;
    inst.pairing = std::move(pairing);
    inst.coloring = coloring;
    inst.display = std::move(display);
    inst.components = std::move(components);
    check_labeling(inst, coloring);
    inst.counted.assign(static_cast<size_t>(n), 0);
    inst.adj.assign(static_cast<size_t>(n), 0);
    for (int p = 1; p <= n; ++p)
        for (int k = 1; k <= n; ++k) {
            if (k == p || inst.pairing(p - 1, k - 1) == 0)
                continue;
            inst.adj[static_cast<size_t>(p) - 1] |= vertex_bit(k);
            if (inst.pairing(p - 1, k - 1) % 2 != 0)
                inst.counted[static_cast<size_t>(p) - 1] |= vertex_bit(k);
        }
    return inst;
}

PuzzleInstance make_instance(const DynkinDiagram& d, Labeling coloring) {
    std::vector<int> positions(static_cast<size_t>(d.n()));
    std::iota(positions.begin(), positions.end(), 1);
    return make_instance(d.cartan, coloring, {}, {BoardComponent{d.type, positions}});
}

PuzzleInstance disjoint_union(const std::vector<PuzzleInstance>& parts) {
    int n = 0;
    for (const auto& p : parts)
        n += p.n;
    check_board_size(n);

    Eigen::MatrixXi pairing = Eigen::MatrixXi::Zero(n, n);
    pairing.diagonal().setConstant(2);
    Labeling coloring = 0;
    std::vector<int> display;
    std::vector<BoardComponent> comps;
    int offset = 0;
    for (const auto& p : parts) {
        pairing.block(offset, offset, p.n, p.n) = p.pairing;
        coloring |= p.coloring << offset;
        for (int v : p.display)
            display.push_back(v);
        for (BoardComponent c : p.components) {
            for (int& pos : c.positions)
                pos += offset;
            comps.push_back(std::move(c));
        }
        offset += p.n;
    }
    return make_instance(std::move(pairing), coloring, std::move(display), std::move(comps));
}

std::vector<int> counted_neighbors(const PuzzleInstance& inst, int p) {
    check_position(inst, p);
    std::vector<int> out;
    for (int k = 1; k <= inst.n; ++k)
        if (inst.counted[static_cast<size_t>(p) - 1] & vertex_bit(k))
            out.push_back(k);
    return out;
}

Labeling apply_move(const PuzzleInstance& inst, Labeling a, int p) {
    check_position(inst, p);
    check_labeling(inst, a);
    const int parity =
        (std::popcount(a & inst.counted[static_cast<size_t>(p) - 1]) + inst.twist(p)) & 1;
    return parity ? a ^ vertex_bit(p) : a;
}

bool is_fixed(const PuzzleInstance& inst, Labeling a) {
    check_labeling(inst, a);
    for (int p = 1; p <= inst.n; ++p)
        if ((std::popcount(a & inst.counted[static_cast<size_t>(p) - 1]) + inst.twist(p)) & 1)
            return false;
    return true;
}

std::vector<Labeling> orbit_of(const PuzzleInstance& inst, Labeling a, int cap) {
    check_cap(inst.n, cap);
    check_labeling(inst, a);
    std::vector<Labeling> orbit, stack{a};
    std::vector<bool> seen(Labeling{1} << inst.n, false);
    seen[a] = true;
    while (!stack.empty()) {
        const Labeling b = stack.back();
        stack.pop_back();
        orbit.push_back(b);
        for (int p = 1; p <= inst.n; ++p) {
            const Labeling c = apply_move(inst, b, p);
            if (!seen[c]) {
                seen[c] = true;
                stack.push_back(c);
            }
        }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

OrbitDecomposition enumerate_orbits(const PuzzleInstance& inst, int cap) {
    check_cap(inst.n, cap);
    const Labeling total = Labeling{1} << inst.n;
    OrbitDecomposition dec;
    dec.n = inst.n;
    dec.class_of.assign(total, -1);

    std::vector<Labeling> stack;
    for (Labeling a = 0; a < total; ++a) {
        if (dec.class_of[a] >= 0)
            continue;
        // Ascending sweep: the first unseen labeling is its class minimum.
        const int id = static_cast<int>(dec.reps.size());
        dec.reps.push_back(a);
        dec.sizes.push_back(0);
        dec.class_of[a] = id;
        stack.assign(1, a);
        while (!stack.empty()) {
            const Labeling b = stack.back();
            stack.pop_back();
            ++dec.sizes[static_cast<size_t>(id)];
            for (int p = 1; p <= inst.n; ++p) {
                const Labeling c = apply_move(inst, b, p);
                if (dec.class_of[c] < 0) {
                    dec.class_of[c] = id;
                    stack.push_back(c);
                }
            }
        }
    }
    dec.zero_class = dec.class_of[0];
    return dec;
}

std::vector<Labeling> class_of_zero(const PuzzleInstance& inst, int cap) {
    return orbit_of(inst, 0, cap);
}

int component_count(const PuzzleInstance& inst, Labeling a, std::optional<int> box_at) {
    check_labeling(inst, a);
    if (box_at)
        check_position(inst, *box_at);
    int count = 0;
    Labeling left = a;
    while (left) {
        ++count;
        Labeling comp = left & -left; // lowest-numbered unvisited support vertex
        for (;;) {
            Labeling grown = comp;
            for (int p = 1; p <= inst.n; ++p)
                if (comp & vertex_bit(p))
                    grown |= inst.adj[static_cast<size_t>(p) - 1] & a;
            if (grown == comp)
                break;
            comp = grown;
        }
        left &= ~comp;
    }
    if (box_at && !get_vertex(a, *box_at))
        ++count; // the box sits alone
    return count;
}

Labeling xi_labeling(int n, int r) {
    check_board_size(n);
    if (r < 0 || (r > 0 && 2 * r - 1 > n))
        throw ArgumentError("xi index out of range");
    Labeling a = 0;
    for (int j = 1; j <= r; ++j)
        a |= vertex_bit(2 * j - 1);
    return a;
}

Labeling eta_labeling(int n, int r) {
    check_board_size(n);
    if (r < 0 || (r > 0 && n - 2 * (r - 1) < 1))
        throw ArgumentError("eta index out of range");
    Labeling a = 0;
    for (int j = 0; j < r; ++j)
        a |= vertex_bit(n - 2 * j);
    return a;
}

Labeling pq_labeling(int n, int m, int p, int q) {
    check_board_size(n);
    if (m < 1 || m > n)
        throw ArgumentError("twist position out of range");
    const Labeling left = eta_labeling(m - 1, p);
    const Labeling right = xi_labeling(n - m, q);
    return left | (right << m);
}

OrbitDecomposition
product_decomposition(int n,
                      const std::vector<std::pair<std::vector<int>, OrbitDecomposition>>& parts,
                      int cap) {
    check_board_size(n);
    check_cap(n, cap);
    std::vector<bool> covered(static_cast<size_t>(n) + 1, false);
    for (const auto& [positions, dec] : parts) {
        if (static_cast<int>(positions.size()) != dec.n)
            throw ArgumentError("part positions must match the part board size");
        for (int pos : positions) {
            if (pos < 1 || pos > n || covered[static_cast<size_t>(pos)])
                throw ArgumentError("part positions must be disjoint and within the board");
            covered[static_cast<size_t>(pos)] = true;
        }
    }
    for (int pos = 1; pos <= n; ++pos)
        if (!covered[static_cast<size_t>(pos)])
            throw ArgumentError("part positions must cover the board");

    const size_t k = parts.size();
    std::uint64_t tuples = 1;
    for (const auto& [positions, dec] : parts) {
        tuples *= dec.class_count();
        if (tuples > (Labeling{1} << n))
            throw ArgumentError("inconsistent part decompositions");
    }

    auto scatter = [&](size_t j, Labeling local) {
        const auto& [positions, dec] = parts[j];
        Labeling global = 0;
        for (int q = 1; q <= dec.n; ++q)
            if (get_vertex(local, q))
                global |= vertex_bit(positions[static_cast<size_t>(q) - 1]);
        return global;
    };
    auto gather = [&](size_t j, Labeling global) {
        const auto& [positions, dec] = parts[j];
        Labeling local = 0;
        for (int q = 1; q <= dec.n; ++q)
            if (get_vertex(global, positions[static_cast<size_t>(q) - 1]))
                local |= vertex_bit(q);
        return local;
    };

    // Mixed-radix sweep over class tuples; ids then sorted by scattered rep.
    std::vector<Labeling> rep_of(tuples, 0);
    std::vector<std::uint64_t> size_of(tuples, 1);
    std::vector<std::uint64_t> digit(k, 0);
    for (std::uint64_t t = 0; t < tuples; ++t) {
        for (size_t j = 0; j < k; ++j) {
            rep_of[t] |= scatter(j, parts[j].second.reps[digit[j]]);
            size_of[t] *= parts[j].second.sizes[digit[j]];
        }
        for (size_t j = k; j-- > 0;) {
            if (++digit[j] < parts[j].second.class_count())
                break;
            digit[j] = 0;
        }
    }
    std::vector<std::uint64_t> order(tuples);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::uint64_t x, std::uint64_t y) { return rep_of[x] < rep_of[y]; });
    std::vector<std::int32_t> id_of(tuples);
    for (std::uint64_t r = 0; r < tuples; ++r)
        id_of[order[r]] = static_cast<std::int32_t>(r);

    OrbitDecomposition dec;
    dec.n = n;
    dec.reps.resize(tuples);
    dec.sizes.resize(tuples);
    for (std::uint64_t t = 0; t < tuples; ++t) {
        dec.reps[static_cast<size_t>(id_of[t])] = rep_of[t];
        dec.sizes[static_cast<size_t>(id_of[t])] = size_of[t];
    }
    dec.class_of.assign(Labeling{1} << n, 0);
    for (Labeling a = 0; a < (Labeling{1} << n); ++a) {
        std::uint64_t t = 0;
        for (size_t j = 0; j < k; ++j)
            t = t * parts[j].second.class_count() +
                static_cast<std::uint64_t>(parts[j].second.class_of[gather(j, a)]);
        dec.class_of[a] = id_of[t];
    }
    dec.zero_class = dec.class_of[0];
    return dec;
}

OrbitDecomposition product_decomposition(const std::vector<OrbitDecomposition>& parts, int cap) {
    int n = 0;
    std::vector<std::pair<std::vector<int>, OrbitDecomposition>> placed;
    for (const auto& dec : parts) {
        std::vector<int> positions(static_cast<size_t>(dec.n));
        std::iota(positions.begin(), positions.end(), n + 1);
        placed.emplace_back(std::move(positions), dec);
        n += dec.n;
    }
    return product_decomposition(n, placed, cap);
}

} // namespace reeder
