#pragma once

#include "reeder/forms.hpp"
#include "reeder/lattice.hpp"
#include "reeder/puzzle.hpp"

#include <cstdint>
#include <vector>

namespace reeder {

// Component count of a real homogeneous space G/H: xi holds one
// representative per class of H's board, xi0 those whose image under the
// embedding lands in the ambient class of zero.  count = |xi0| >= 1.
struct Pi0Result {
    std::uint64_t count = 0;
    std::vector<Labeling> xi;
    std::vector<Labeling> xi0;
    Int pi1_order = 1;
    std::vector<Int> invariant_factors;
    std::uint64_t ambient_class_count = 0;
    std::uint64_t subgroup_class_count = 0;
    int sub_n = 0; // board size behind the xi strings
};

struct SubgroupPuzzle {
    PuzzleInstance instance; // positions = kept vertices, ascending
    EmbeddingMap embedding;
};

// Board and embedding for the subgroup spanned by the kept vertices.
// Requires an inner ambient form and an odd fundamental group
// (UnsupportedError otherwise; twisted ambients go through reduced_pi0).
SubgroupPuzzle subgroup_puzzle(const RealFormSpec& ambient, const std::vector<int>& keep,
                               bool use_extended = false);

Pi0Result pi0_count(const RealFormSpec& ambient, const std::vector<int>& keep,
                    bool use_extended = false, int cap = 24);

// Same pipeline with a caller-supplied embedding; no fundamental-group
// check.  Dimension mismatches raise ArgumentError.
Pi0Result pi0_with_custom_embedding(const PuzzleInstance& sub, const EmbeddingMap& iota,
                                    const PuzzleInstance& ambient, int cap = 24);

// Built-in reduction for the twisted ambient family Spin(2m+1, 2n+1):
// removing fixed vertex v with m < v <= m+n-2 reduces to the inner pair
// (SU(m,n), SU(m,n-k) x SU(k)) with k = m+n-v.  Other twisted families are
// not built in; use pi0_with_custom_embedding.
Pi0Result reduced_pi0(const RealFormSpec& ambient, int removed_vertex, int cap = 24);

} // namespace reeder
