#include "reeder/lattice.hpp"

#include <algorithm>

namespace reeder {

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Smallest nonzero entry of S in the trailing block starting at (t,t).
bool find_pivot(const IntMatrix& S, Eigen::Index t, Eigen::Index& pi, Eigen::Index& pj) {
    bool found = false;
    Int best;
    for (Eigen::Index i = t; i < S.rows(); ++i)
        for (Eigen::Index j = t; j < S.cols(); ++j) {
            if (S(i, j) == 0)
                continue;
            const Int a = int_abs(S(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithResult smith_normal_form(IntMatrix M) {
    const Eigen::Index r = M.rows(), c = M.cols();
    SmithResult res;
    res.U = IntMatrix::Identity(r, r);
    res.V = IntMatrix::Identity(c, c);
    res.S = std::move(M);
    IntMatrix& S = res.S;

    for (Eigen::Index t = 0; t < std::min(r, c); ++t) {
        for (;;) {
            Eigen::Index pi = t, pj = t;
            if (!find_pivot(S, t, pi, pj))
                break;
            if (pi != t) {
                S.row(t).swap(S.row(pi));
                res.U.row(t).swap(res.U.row(pi));
            }
            if (pj != t) {
                S.col(t).swap(S.col(pj));
                res.V.col(t).swap(res.V.col(pj));
            }
            // Reduce the pivot row and column; a leftover remainder becomes
            // the next, strictly smaller pivot.
            bool clean = true;
            for (Eigen::Index i = t + 1; i < r; ++i) {
                if (S(i, t) == 0)
                    continue;
                const Int q = S(i, t) / S(t, t);
                S.row(i) -= q * S.row(t);
                res.U.row(i) -= q * res.U.row(t);
                if (S(i, t) != 0)
                    clean = false;
            }
            for (Eigen::Index j = t + 1; j < c; ++j) {
                if (S(t, j) == 0)
                    continue;
                const Int q = S(t, j) / S(t, t);
                S.col(j) -= q * S.col(t);
                res.V.col(j) -= q * res.V.col(t);
                if (S(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // Divisibility chain: fold any non-multiple into the pivot row.
            bool divides = true;
            for (Eigen::Index i = t + 1; i < r && divides; ++i)
                for (Eigen::Index j = t + 1; j < c && divides; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        S.row(t) += S.row(i);
                        res.U.row(t) += res.U.row(i);
                        divides = false;
                    }
            if (divides)
                break;
        }
        if (S(t, t) < 0) {
            S.row(t) = -S.row(t);
            res.U.row(t) = -res.U.row(t);
        }
    }

    res.diagonal.reserve(static_cast<size_t>(std::min(r, c)));
    for (Eigen::Index t = 0; t < std::min(r, c); ++t)
        res.diagonal.push_back(S(t, t));
    return res;
}

IntMatrix coroot_matrix(const DynkinType& ambient, const std::vector<int>& S) {
    const ExtendedDiagram ext = extend(build_diagram(ambient));
    subdiagram(ext, S); // range, order and shape validation
    const int n = ambient.rank;
    IntMatrix M = IntMatrix::Zero(n, static_cast<Eigen::Index>(S.size()));
    for (size_t q = 0; q < S.size(); ++q) {
        if (S[q] == 0) {
            for (int i = 1; i <= n; ++i)
                M(i - 1, static_cast<Eigen::Index>(q)) = -Int(ext.comarks(i));
        } else {
            M(S[q] - 1, static_cast<Eigen::Index>(q)) = 1;
        }
    }
    return M;
}

SubgroupSpec make_subgroup(RealFormSpec ambient, std::vector<int> keep, bool use_extended) {
    if (keep.empty())
        throw ArgumentError("kept vertex set must be nonempty");
    if (!use_extended && !keep.empty() && keep.front() == 0)
        throw ArgumentError("vertex 0 requires the extended flag");
    coroot_matrix(ambient.dtype, keep); // validates the subset
    return {std::move(ambient), std::move(keep), use_extended};
}

Labeling EmbeddingMap::apply(Labeling sub) const {
    const int s = static_cast<int>(matrix_mod2.cols());
    Labeling a = 0;
    for (int q = 1; q <= s; ++q) {
        if (!get_vertex(sub, q))
            continue;
        for (int i = 1; i <= ambient_n; ++i)
            if (matrix_mod2(i - 1, q - 1))
                a ^= vertex_bit(i);
    }
    return a;
}

Int fundamental_group_order(const SubgroupSpec& spec) {
    const IntMatrix M = coroot_matrix(spec.ambient.dtype, spec.keep);
    const SmithResult snf = smith_normal_form(M);
    Int order = 1;
    for (size_t q = 0; q < spec.keep.size(); ++q) {
        if (snf.diagonal[q] == 0)
            throw Error("coroot matrix lost column rank"); // cannot happen for valid subsets
        order *= snf.diagonal[q];
    }
    return order;
}

EmbeddingMap embedding_mod2(const SubgroupSpec& spec) {
    EmbeddingMap emb;
    emb.integer_matrix = coroot_matrix(spec.ambient.dtype, spec.keep);
    emb.ambient_n = spec.ambient.dtype.rank;
    const SmithResult snf = smith_normal_form(emb.integer_matrix);
    emb.pi1_order = 1;
    for (size_t q = 0; q < spec.keep.size(); ++q) {
        emb.invariant_factors.push_back(snf.diagonal[q]);
        emb.pi1_order *= snf.diagonal[q];
    }
    emb.matrix_mod2 = Eigen::MatrixXi(emb.integer_matrix.rows(), emb.integer_matrix.cols());
    for (Eigen::Index i = 0; i < emb.integer_matrix.rows(); ++i)
        for (Eigen::Index j = 0; j < emb.integer_matrix.cols(); ++j)
            emb.matrix_mod2(i, j) = static_cast<int>(int_abs(emb.integer_matrix(i, j)) % 2);

    if (emb.pi1_order % 2 == 1) {
        // Odd torsion forces injectivity mod 2; verify by elimination.
        std::vector<std::uint64_t> rows(static_cast<size_t>(emb.matrix_mod2.rows()), 0);
        for (Eigen::Index i = 0; i < emb.matrix_mod2.rows(); ++i)
            for (Eigen::Index j = 0; j < emb.matrix_mod2.cols(); ++j)
                if (emb.matrix_mod2(i, j))
                    rows[static_cast<size_t>(i)] |= std::uint64_t{1} << j;
        int rank = 0;
        for (Eigen::Index j = 0; j < emb.matrix_mod2.cols(); ++j) {
            const std::uint64_t bit = std::uint64_t{1} << j;
            size_t p = static_cast<size_t>(rank);
            while (p < rows.size() && !(rows[p] & bit))
                ++p;
            if (p == rows.size())
                continue;
            std::swap(rows[p], rows[static_cast<size_t>(rank)]);
            for (size_t i = 0; i < rows.size(); ++i)
                if (i != static_cast<size_t>(rank) && (rows[i] & bit))
                    rows[i] ^= rows[static_cast<size_t>(rank)];
            ++rank;
        }
        if (rank != static_cast<int>(emb.matrix_mod2.cols()))
            throw Error("odd torsion but mod-2 map not injective");
    }
    return emb;
}

Coloring induced_coloring(const SubgroupSpec& spec) {
    if (!spec.ambient.inner())
        throw UnsupportedError("coloring transport needs an inner ambient form; "
                               "use the reduction recipes for twisted ones");
    const int n = spec.ambient.dtype.rank;
    const int s = static_cast<int>(spec.keep.size());
    Coloring sub = 0;
    for (int q = 1; q <= s; ++q) {
        const int j = spec.keep[static_cast<size_t>(q) - 1];
        int bit;
        if (j == 0) {
            const ExtendedDiagram ext = extend(build_diagram(spec.ambient.dtype));
            int parity = 0;
            for (int i = 1; i <= n; ++i)
                parity += ext.marks(i) * get_vertex(spec.ambient.coloring, i);
            bit = parity & 1;
        } else {
            bit = get_vertex(spec.ambient.coloring, j);
        }
        if (bit)
            sub |= vertex_bit(q);
    }
    return sub;
}

} // namespace reeder
