#pragma once

#include "reeder/dynkin.hpp"
#include "reeder/puzzle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace reeder {

using Coloring = Labeling;

// Affine labels nu_j in {0,1} on the extended diagram.  A valid diagram has
// weighted black sum exactly 2: either one black vertex of mark 2, or black
// at vertex 0 plus one other vertex of mark 1.
struct KacDiagram {
    ExtendedDiagram ext;
    std::vector<int> nu; // size n+1
};

struct KacCheck {
    bool ok = false;
    std::string diagnostic;
};

KacCheck validate_kac(const KacDiagram& kd);

// Strip vertex 0; the remaining labels become the twist bits.
std::pair<DynkinDiagram, Coloring> kac_to_twisting(const KacDiagram& kd);

// An absolutely simple, simply connected real form: diagram, an involutive
// symmetry (identity for inner forms) and twist bits supported on the
// symmetry-fixed vertices.
struct RealFormSpec {
    DynkinType dtype{Series::A, 1};
    DiagramAutomorphism tau;
    Coloring coloring = 0;
    std::string display_name;
    std::optional<std::vector<int>> kac_nu; // affine labels, when cataloged

    bool inner() const { return tau.is_identity(); }
};

// Validates tau (involutive symmetry of the diagram) and the coloring
// support; throws ArgumentError otherwise.
RealFormSpec make_form(DynkinType t, DiagramAutomorphism tau, Coloring coloring,
                       std::string display_name = "",
                       std::optional<std::vector<int>> kac_nu = std::nullopt);
RealFormSpec make_inner_form(DynkinType t, int twist_vertex, std::string display_name = "",
                             std::optional<std::vector<int>> kac_nu = std::nullopt);

// Vertices fixed by tau, ascending.
std::vector<int> fixed_vertices(const RealFormSpec& spec);

// The board on the fixed vertex set: counted neighbors are the ambient
// counted neighbors that are themselves fixed, twist bits restrict.  For an
// inner form this is the full board.  lift() zero-extends a reduced labeling
// back to a symmetric labeling of the full diagram.
struct ReducedPuzzle {
    PuzzleInstance instance;
    std::vector<int> vertex_of; // board position -> diagram vertex
    int ambient_n = 0;

    Labeling lift(Labeling reduced) const;
};

ReducedPuzzle reduce_outer(const RealFormSpec& spec);

// Class count of the reduced board; for the outer A-series with empty fixed
// set this is 1.
std::uint64_t h1_cardinality(const RealFormSpec& spec, int cap = 24);
// One lifted representative per class, ordered by the reduced-board minimum.
std::vector<Labeling> h1_representatives(const RealFormSpec& spec, int cap = 24);

// The case-by-case count computed symbolically, no enumeration.  Throws
// UnsupportedError when the family has no stated formula.
std::uint64_t closed_form_count(const RealFormSpec& spec);

// Catalog grammar: SU(p,q), SU(k), SL(n,R), SL(n,H), Spin(p,q), Spin(k),
// Spin*(2n) / SpinStar(2n), Sp(n), Sp(p,q), Sp(2n,R) / SpR(2n), EI..EIX,
// FI, FII, G2compact, G2split, and E6/E7/E8/F4/G2 for compact forms.
// Throws CatalogError on unknown names or invalid parameters.
RealFormSpec named_form(const std::string& name);

// Internal identifier, e.g. "A7^(2)" for inner, "2A5^(3)" for outer.
std::string twisting_label(const RealFormSpec& spec);

// Every cataloged form: classical families up to the given rank plus the
// exceptional list.
std::vector<RealFormSpec> catalog_forms(int max_classical_rank = 12);

} // namespace reeder
