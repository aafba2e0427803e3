#pragma once

#include "reeder/dynkin.hpp"
#include "reeder/forms.hpp"
#include "reeder/homspace.hpp"
#include "reeder/lattice.hpp"
#include "reeder/puzzle.hpp"

#include <json.hpp>

namespace reeder {

// All documents use insertion-ordered objects so that parsing an emitted
// document and dumping it again reproduces the bytes exactly.
using Json = nlohmann::ordered_json;

Json type_to_json(const DynkinType& t);
DynkinType type_from_json(const Json& j);

// Full dump: finite and extended pairing matrices, marks, comarks.
Json extended_to_json(const ExtendedDiagram& e);

// Arbitrary-precision matrices go out as arrays of arrays of decimal strings.
Json int_matrix_to_json(const IntMatrix& m);

Json labeling_to_json_array(Labeling a, int n);

// Type, symmetry permutation, twist bits, affine labels when cataloged.
Json spec_to_json(const RealFormSpec& spec);

Json orbits_to_json(const PuzzleInstance& inst, const OrbitDecomposition& dec);

Json pi0_to_json(const Pi0Result& res);

} // namespace reeder
