#pragma once

#include "reeder/dynkin.hpp"
#include "reeder/forms.hpp"
#include "reeder/intmath.hpp"
#include "reeder/puzzle.hpp"

#include <vector>

namespace reeder {

// U * input * V = S with U, V unimodular and S diagonal, each diagonal entry
// nonnegative and dividing the next.  Exact arithmetic throughout.
struct SmithResult {
    IntMatrix U, S, V;
    std::vector<Int> diagonal; // min(rows, cols) entries of S
};

SmithResult smith_normal_form(IntMatrix M);

// A subgroup generated by the root subgroups of a vertex subset.  Vertex 0
// (the lowest root) is admitted only when use_extended is set.
struct SubgroupSpec {
    RealFormSpec ambient; // must be inner for coloring transport
    std::vector<int> keep;
    bool use_extended = false;
};

// Validates the subset: ascending, in range, 0 gated by the flag, induced
// subgraph a union of finite diagrams (UnsupportedError otherwise).
SubgroupSpec make_subgroup(RealFormSpec ambient, std::vector<int> keep, bool use_extended = false);

// Columns express the subset's coroots in the ambient coroot basis: the
// standard basis vector for a vertex j != 0, minus the comark vector for
// vertex 0.
IntMatrix coroot_matrix(const DynkinType& ambient, const std::vector<int>& S);

// The sub-to-ambient transport of 2-torsion labelings.
struct EmbeddingMap {
    IntMatrix integer_matrix;           // n x |S| coroot matrix
    Eigen::MatrixXi matrix_mod2;        // same shape, entries 0/1
    Int pi1_order;                      // product of the |S| invariant factors
    std::vector<Int> invariant_factors; // |S| entries
    int ambient_n = 0;

    // sub labeling indexed by the kept vertices in ascending order
    Labeling apply(Labeling sub) const;
};

EmbeddingMap embedding_mod2(const SubgroupSpec& spec);
Int fundamental_group_order(const SubgroupSpec& spec);

// Twist bits for the sub-board (positions = kept vertices ascending):
// vertex j != 0 keeps its ambient bit, vertex 0 gets the mark·bit parity.
// Only inner ambient forms are supported here.
Coloring induced_coloring(const SubgroupSpec& spec);

} // namespace reeder
