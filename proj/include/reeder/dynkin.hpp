#pragma once

#include "reeder/errors.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace reeder {

// Vertex numbering follows the convention used throughout this project:
// the branch vertex of D_n is n-2, the short leaf of E6/E7/E8 carries the
// largest index (6, 7, 8 attached to 3, 4, 5 respectively), B_n has a short
// last root, C_n a long last root, F4 has short roots 1,2 and long roots 3,4,
// G2 has short root 1 and long root 2.  Translation tables to and from the
// Bourbaki numbering are provided at the bottom.

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
    Series series;
    int rank;

    bool operator==(const DynkinType&) const = default;
};

// Throws ArgumentError unless the (series, rank) pair names a finite
// irreducible diagram: A n>=1, B n>=2, C n>=3, D n>=4, E 6..8, F 4, G 2.
DynkinType make_type(Series series, int rank);
DynkinType parse_type(const std::string& name); // "A5", "E8", ...
std::string type_name(const DynkinType& t);

struct DynkinDiagram {
    DynkinType type;
    Eigen::MatrixXi cartan; // 0-based storage of the n x n Cartan matrix

    int n() const { return type.rank; }
    // entry(i, k) = <alpha_i, alpha_k-covector>, vertices 1..n
    int entry(int i, int k) const { return cartan(i - 1, k - 1); }
    bool adjacent(int i, int k) const { return i != k && entry(i, k) != 0; }
    std::vector<int> neighbors(int i) const;
};

DynkinDiagram build_diagram(const DynkinType& t);

// Extended (affine) diagram: vertex 0 is the lowest root.  marks form the
// unique primitive positive integer vector in the left kernel of the
// (n+1) x (n+1) matrix, comarks the one in the right kernel; marks[0] == 1.
struct ExtendedDiagram {
    DynkinDiagram base;
    Eigen::MatrixXi cartan;  // vertices 0..n, 0-based indices coincide
    Eigen::VectorXi marks;   // size n+1
    Eigen::VectorXi comarks; // size n+1

    int n() const { return base.n(); }
    int entry(int i, int k) const { return cartan(i, k); }
    bool adjacent(int i, int k) const { return i != k && cartan(i, k) != 0; }
    std::vector<int> neighbors(int i) const;
};

ExtendedDiagram extend(const DynkinDiagram& d);

// A diagram symmetry; image(i) gives the image of vertex i (1-based).
struct DiagramAutomorphism {
    std::vector<int> perm; // perm[i-1] = image of vertex i

    int image(int i) const { return perm[static_cast<size_t>(i) - 1]; }
    bool is_identity() const;
    bool operator==(const DiagramAutomorphism&) const = default;
};

// All involutive diagram symmetries, identity first.  The flip of A_n
// (n >= 2), the leaf swap of D_n, the three leaf transpositions of D4 and
// the flip of E6 are the only nontrivial ones.
std::vector<DiagramAutomorphism> automorphisms(const DynkinDiagram& d);

// One connected piece of an induced subdiagram, identified up to isomorphism.
// canon_to_ambient[p-1] is the ambient vertex playing the role of vertex p
// in the canonical diagram of `type`; the embedding is chosen
// deterministically (canonical vertices matched in order, smallest feasible
// ambient vertex first), so subdiagram(E, full vertex set of the base) yields
// identity maps.
struct ClassifiedComponent {
    DynkinType type;
    std::vector<int> vertices;         // ambient vertices, ascending
    std::vector<int> canon_to_ambient; // size type.rank
};

// Decompose the subgraph of the extended diagram induced by S (subset of
// {0..n}, ascending, no duplicates) into connected components and match each
// against the finite diagrams.  Components listed by smallest vertex.
// Throws UnsupportedError if some component is not a finite Dynkin diagram.
std::vector<ClassifiedComponent> subdiagram(const ExtendedDiagram& e, const std::vector<int>& S);

// Bourbaki vertex translation; both directions, 1-based values.
// to_bourbaki[i-1] is the Bourbaki number of internal vertex i.
std::vector<int> to_bourbaki(const DynkinType& t);
std::vector<int> from_bourbaki(const DynkinType& t);

} // namespace reeder
