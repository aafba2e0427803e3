#include "reeder/homspace.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace reeder {

SubgroupPuzzle subgroup_puzzle(const RealFormSpec& ambient, const std::vector<int>& keep,
                               bool use_extended) {
    if (!ambient.inner())
        throw UnsupportedError("subgroup boards need an inner ambient form; "
                               "twisted families go through the reduction recipes");
    const SubgroupSpec spec = make_subgroup(ambient, keep, use_extended);
    EmbeddingMap emb = embedding_mod2(spec);
    if (emb.pi1_order % 2 == 0)
        throw UnsupportedError("fundamental group of order " + emb.pi1_order.str() +
                               " is even; only odd orders transport the class of zero");

    const ExtendedDiagram ext = extend(build_diagram(ambient.dtype));
    const int s = static_cast<int>(keep.size());
    Eigen::MatrixXi pairing(s, s);
    for (int q = 0; q < s; ++q)
        for (int w = 0; w < s; ++w)
            pairing(q, w) = ext.entry(keep[static_cast<size_t>(q)], keep[static_cast<size_t>(w)]);

    std::vector<int> pos_of(static_cast<size_t>(ambient.dtype.rank) + 2, 0);
    for (int q = 1; q <= s; ++q)
        pos_of[static_cast<size_t>(keep[static_cast<size_t>(q) - 1])] = q;
    std::vector<BoardComponent> comps;
    for (const ClassifiedComponent& c : subdiagram(ext, keep)) {
        BoardComponent bc;
        bc.type = c.type;
        for (int v : c.canon_to_ambient)
            bc.positions.push_back(pos_of[static_cast<size_t>(v)]);
        comps.push_back(std::move(bc));
    }

    SubgroupPuzzle sp;
    sp.instance = make_instance(std::move(pairing), induced_coloring(spec), keep, std::move(comps));
    sp.embedding = std::move(emb);
    return sp;
}

namespace {

// Connected position blocks of a board, each as (ascending positions, board).
std::vector<std::pair<std::vector<int>, PuzzleInstance>> split_board(const PuzzleInstance& inst) {
    std::vector<std::pair<std::vector<int>, PuzzleInstance>> out;
    std::vector<bool> seen(static_cast<size_t>(inst.n) + 1, false);
    for (int p = 1; p <= inst.n; ++p) {
        if (seen[static_cast<size_t>(p)])
            continue;
        std::vector<int> block{p};
        seen[static_cast<size_t>(p)] = true;
        for (size_t head = 0; head < block.size(); ++head)
            for (int q = 1; q <= inst.n; ++q)
                if (!seen[static_cast<size_t>(q)] && inst.adjacent(block[head], q)) {
                    seen[static_cast<size_t>(q)] = true;
                    block.push_back(q);
                }
        std::sort(block.begin(), block.end());

        const int r = static_cast<int>(block.size());
        Eigen::MatrixXi pairing(r, r);
        Labeling coloring = 0;
        std::vector<int> display;
        for (int q = 1; q <= r; ++q) {
            const int p_global = block[static_cast<size_t>(q) - 1];
            for (int w = 1; w <= r; ++w)
                pairing(q - 1, w - 1) = inst.pairing(p_global - 1, block[static_cast<size_t>(w) - 1] - 1);
            if (inst.twist(p_global))
                coloring |= vertex_bit(q);
            display.push_back(inst.display[static_cast<size_t>(p_global) - 1]);
        }
        out.emplace_back(std::move(block),
                         make_instance(std::move(pairing), coloring, std::move(display), {}));
    }
    return out;
}

} // namespace

Pi0Result pi0_with_custom_embedding(const PuzzleInstance& sub, const EmbeddingMap& iota,
                                    const PuzzleInstance& ambient, int cap) {
    if (iota.ambient_n != ambient.n)
        throw ArgumentError("embedding target size does not match the ambient board");
    if (static_cast<int>(iota.matrix_mod2.cols()) != sub.n)
        throw ArgumentError("embedding source size does not match the subgroup board");

    // Classes of the subgroup board, component by component.
    std::vector<std::pair<std::vector<int>, OrbitDecomposition>> parts;
    for (auto& [positions, board] : split_board(sub))
        parts.emplace_back(positions, enumerate_orbits(board, cap));
    const OrbitDecomposition sub_dec = product_decomposition(sub.n, parts, cap);

    const OrbitDecomposition amb_dec = enumerate_orbits(ambient, cap);

    Pi0Result res;
    res.sub_n = sub.n;
    res.pi1_order = iota.pi1_order;
    res.invariant_factors = iota.invariant_factors;
    res.subgroup_class_count = sub_dec.class_count();
    res.ambient_class_count = amb_dec.class_count();
    res.xi = sub_dec.reps;
    for (Labeling rep : sub_dec.reps)
        if (amb_dec.class_id(iota.apply(rep)) == amb_dec.zero_class)
            res.xi0.push_back(rep);
    res.count = res.xi0.size();
    if (res.count < 1 || res.count > res.subgroup_class_count)
        throw Error("class transport produced an impossible component count");
    return res;
}

Pi0Result pi0_count(const RealFormSpec& ambient, const std::vector<int>& keep, bool use_extended,
                    int cap) {
    const SubgroupPuzzle sp = subgroup_puzzle(ambient, keep, use_extended);
    const PuzzleInstance amb = make_instance(build_diagram(ambient.dtype), ambient.coloring);
    return pi0_with_custom_embedding(sp.instance, sp.embedding, amb, cap);
}

Pi0Result reduced_pi0(const RealFormSpec& ambient, int removed_vertex, int cap) {
    const int N = ambient.dtype.rank;
    const bool spin_odd_odd =
        ambient.dtype.series == Series::D && !ambient.inner() &&
        fixed_vertices(ambient) == [&] {
            std::vector<int> v(static_cast<size_t>(N) - 2);
            std::iota(v.begin(), v.end(), 1);
            return v;
        }() &&
        std::popcount(ambient.coloring) == 1;
    if (!spin_odd_odd)
        throw UnsupportedError("no built-in reduction for this family; "
                               "supply an explicit embedding instead");

    const int m = std::countr_zero(ambient.coloring) + 1; // twist vertex
    const int n = N - m - 1;
    const int k = m + n - removed_vertex;
    if (m < 1 || n < 3)
        throw UnsupportedError("reduction needs parameters m >= 1 and n >= 3");
    if (k < 2 || k >= n)
        throw UnsupportedError("removed vertex " + std::to_string(removed_vertex) +
                               " leaves the recipe domain 2 <= k < n");

    // Inner pair: ambient SU(m,n) on a path of rank m+n-1, subgroup from
    // dropping the removed vertex (numbering carries over unchanged).
    const RealFormSpec inner = make_inner_form(make_type(Series::A, N - 2), m);
    std::vector<int> keep;
    for (int v = 1; v <= N - 2; ++v)
        if (v != removed_vertex)
            keep.push_back(v);
    return pi0_count(inner, keep, false, cap);
}

} // namespace reeder
