#pragma once

#include "reeder/dynkin.hpp"
#include "reeder/errors.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace reeder {

// A labeling of a board packs vertex p (1-based) into bit p-1, so low
// vertices are cheap: the numeric minimum of a class prefers support pushed
// toward vertex 1, which makes the standard representatives (support
// {1, 3, ...}) come out as the canonical ones.  Canonical class
// representatives are plain minima of this encoding.
using Labeling = std::uint64_t;

constexpr int max_board_size = 63;

inline Labeling vertex_bit(int p) { return Labeling{1} << (p - 1); }
inline int get_vertex(Labeling a, int p) { return static_cast<int>((a >> (p - 1)) & 1); }

std::string format_labeling(Labeling a, int n);
Labeling parse_labeling(const std::string& s); // digits '0'/'1', length = board size

// One connected piece of a (possibly disconnected) board.
// positions[p-1] is the board position carrying canonical vertex p of `type`.
struct BoardComponent {
    DynkinType type;
    std::vector<int> positions;
};

// Immutable move data for one board.  `pairing` holds the generalized Cartan
// numbers; the move at position p flips bit p exactly when the twist bit
// plus the labels on counted neighbors (those k with pairing(p,k) odd) sum
// to 1 mod 2.  The boxed always-1 vertex of a twisted board is never
// materialized: the twist bit in the move formula plays its role, and only
// component_count can be asked to count it.
struct PuzzleInstance {
    int n = 0;
    Eigen::MatrixXi pairing;       // n x n, 0-based storage
    Labeling coloring = 0;         // twist bits
    std::vector<Labeling> counted; // counted-neighbor mask per position
    std::vector<Labeling> adj;     // adjacency mask per position
    std::vector<int> display;      // board position -> caller's vertex id
    std::vector<BoardComponent> components;

    int twist(int p) const { return get_vertex(coloring, p); }
    bool adjacent(int p, int q) const { return p != q && pairing(p - 1, q - 1) != 0; }
};

PuzzleInstance make_instance(const DynkinDiagram& d, Labeling coloring);
PuzzleInstance make_instance(Eigen::MatrixXi pairing, Labeling coloring, std::vector<int> display,
                             std::vector<BoardComponent> components);
// Stack boards side by side; part j's vertices keep their order after the
// vertices of parts 0..j-1.
PuzzleInstance disjoint_union(const std::vector<PuzzleInstance>& parts);

std::vector<int> counted_neighbors(const PuzzleInstance& inst, int p);
Labeling apply_move(const PuzzleInstance& inst, Labeling a, int p);
bool is_fixed(const PuzzleInstance& inst, Labeling a);

struct OrbitDecomposition {
    int n = 0;
    std::vector<Labeling> reps;          // minimum of each class, ascending
    std::vector<std::uint64_t> sizes;    // matching class sizes
    std::vector<std::int32_t> class_of;  // size 2^n, labeling -> class id
    int zero_class = 0;                  // class id of the all-zero labeling

    std::uint64_t class_count() const { return reps.size(); }
    int class_id(Labeling a) const { return class_of[a]; }
};

// Closure of {a} under all moves, ascending.  The cap bounds the board size,
// not the orbit; a board with more than `cap` vertices is refused.
std::vector<Labeling> orbit_of(const PuzzleInstance& inst, Labeling a, int cap = 24);
OrbitDecomposition enumerate_orbits(const PuzzleInstance& inst, int cap = 24);
std::vector<Labeling> class_of_zero(const PuzzleInstance& inst, int cap = 24);

// Connected components of the support of a.  A virtual boxed 1 attached at
// the given position counts as one extra support vertex.
int component_count(const PuzzleInstance& inst, Labeling a, std::optional<int> box_at = {});

// Standard representatives on a path with n vertices.
Labeling xi_labeling(int n, int r);  // support 1, 3, ..., 2r-1
Labeling eta_labeling(int n, int r); // support n, n-2, ..., n-2(r-1)
// eta_p on vertices 1..m-1, zero at m, xi_q shifted onto m+1..n.
Labeling pq_labeling(int n, int m, int p, int q);

// Product structure for disconnected boards: class ids, reps and sizes are
// component-wise products.  Parts occupy consecutive position blocks in the
// order given.
OrbitDecomposition product_decomposition(const std::vector<OrbitDecomposition>& parts,
                                         int cap = 24);
// Scattered variant: parts[j].first lists the board positions (ascending,
// disjoint, covering 1..n) that part j's vertices occupy.  Representatives
// stay minimal because the position sets are disjoint.
OrbitDecomposition
product_decomposition(int n,
                      const std::vector<std::pair<std::vector<int>, OrbitDecomposition>>& parts,
                      int cap = 24);

} // namespace reeder
