#include "reeder/json_io.hpp"

#include <limits>
#include <string>

namespace reeder {

namespace {

Json int_to_json(const Int& x) {
    // Exact round-trips: values beyond uint64 stay decimal strings so the
    // parser never falls back to floating point.
    if (x >= 0 && x <= Int(std::numeric_limits<std::uint64_t>::max()))
        return Json(static_cast<std::uint64_t>(x));
    return Json(x.str());
}

Json eigen_int_rows(const Eigen::MatrixXi& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json eigen_vec(const Eigen::VectorXi& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

} // namespace

Json type_to_json(const DynkinType& t) {
    Json j;
    j["series"] = std::string(1, static_cast<char>(t.series));
    j["rank"] = t.rank;
    return j;
}

DynkinType type_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("series") || !j.contains("rank"))
        throw ArgumentError("diagram JSON needs \"series\" and \"rank\"");
    const auto& s = j.at("series");
    if (!s.is_string() || s.get<std::string>().size() != 1)
        throw ArgumentError("\"series\" must be a single letter A..G");
    if (!j.at("rank").is_number_integer())
        throw ArgumentError("\"rank\" must be an integer");
    return make_type(static_cast<Series>(s.get<std::string>()[0]), j.at("rank").get<int>());
}

Json extended_to_json(const ExtendedDiagram& e) {
    Json j = type_to_json(e.base.type);
    j["cartan"] = eigen_int_rows(e.base.cartan);
    j["extended_cartan"] = eigen_int_rows(e.cartan);
    j["marks"] = eigen_vec(e.marks);
    j["comarks"] = eigen_vec(e.comarks);
    return j;
}

Json int_matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json labeling_to_json_array(Labeling a, int n) {
    Json out = Json::array();
    for (int p = 1; p <= n; ++p) out.push_back(get_vertex(a, p));
    return out;
}

Json spec_to_json(const RealFormSpec& spec) {
    Json j;
    j["name"] = spec.display_name;
    j["label"] = twisting_label(spec);
    j["series"] = std::string(1, static_cast<char>(spec.dtype.series));
    j["rank"] = spec.dtype.rank;
    j["tau"] = spec.tau.perm;
    j["coloring"] = format_labeling(spec.coloring, spec.dtype.rank);
    if (spec.kac_nu) j["kac"] = *spec.kac_nu;
    return j;
}

Json orbits_to_json(const PuzzleInstance& inst, const OrbitDecomposition& dec) {
    Json j;
    j["board_size"] = inst.n;
    j["vertices"] = inst.display;
    j["coloring"] = format_labeling(inst.coloring, inst.n);
    j["class_count"] = dec.class_count();
    j["zero_class"] = dec.zero_class;
    Json classes = Json::array();
    for (size_t i = 0; i < dec.reps.size(); ++i) {
        Json c;
        c["id"] = i;
        c["rep"] = format_labeling(dec.reps[i], dec.n);
        c["bits"] = labeling_to_json_array(dec.reps[i], dec.n);
        c["size"] = dec.sizes[i];
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    return j;
}

Json pi0_to_json(const Pi0Result& res) {
    Json j;
    j["count"] = res.count;
    j["pi1_order"] = int_to_json(res.pi1_order);
    Json factors = Json::array();
    for (const auto& f : res.invariant_factors) factors.push_back(int_to_json(f));
    j["invariant_factors"] = std::move(factors);
    Json xi = Json::array();
    for (Labeling a : res.xi) xi.push_back(format_labeling(a, res.sub_n));
    j["xi"] = std::move(xi);
    Json xi0 = Json::array();
    for (Labeling a : res.xi0) xi0.push_back(format_labeling(a, res.sub_n));
    j["xi0"] = std::move(xi0);
    j["ambient_class_count"] = res.ambient_class_count;
    j["subgroup_class_count"] = res.subgroup_class_count;
    return j;
}

} // namespace reeder
