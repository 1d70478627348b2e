#include "qframes/json_io.hpp"

#include <fstream>

#include "qframes/errors.hpp"

namespace qframes {

namespace {

double number_at(const Json& j, const char* what) {
    if (!j.is_number()) {
        throw ParseError(std::string("expected a number for ") + what + ", got " +
                         std::string(j.type_name()));
    }
    return j.get<double>();
}

} // namespace

Json to_json(const Quaternion& q) { return Json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) {
        throw ParseError("quaternion must be a 4-array [w, x, y, z]");
    }
    Quaternion q{number_at(j[0], "quaternion component"),
                 number_at(j[1], "quaternion component"),
                 number_at(j[2], "quaternion component"),
                 number_at(j[3], "quaternion component")};
    if (!is_finite(q)) {
        throw ParseError("quaternion components must be finite");
    }
    return q;
}

Json to_json(const QVector& v) {
    Json out = Json::array();
    for (const Quaternion& q : v) {
        out.push_back(to_json(q));
    }
    return out;
}

QVector qvector_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ParseError("vector must be an array of quaternions");
    }
    QVector v(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        v[k] = quaternion_from_json(j[k]);
    }
    return v;
}

Json to_json(const QMatrix& a) {
    Json data = Json::array();
    for (const Quaternion& q : a.data()) {
        data.push_back(to_json(q));
    }
    return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

QMatrix qmatrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("data")) {
        throw ParseError("matrix must be an object with rows, cols, and data");
    }
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const Json& data = j.at("data");
    if (!data.is_array() || data.size() != rows * cols) {
        throw ParseError("matrix data length does not match rows * cols");
    }
    QMatrix a(rows, cols);
    for (std::size_t k = 0; k < data.size(); ++k) {
        a.data()[k] = quaternion_from_json(data[k]);
    }
    return a;
}

Json to_json(const FrameSystem& f) {
    Json vectors = Json::array();
    for (const QVector& v : f.vectors) {
        vectors.push_back(to_json(v));
    }
    return Json{{"dim", f.dim}, {"vectors", std::move(vectors)}};
}

FrameSystem frame_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vectors")) {
        throw ParseError("frame must be an object with dim and vectors");
    }
    const std::size_t dim = j.at("dim").get<std::size_t>();
    const Json& vectors = j.at("vectors");
    if (!vectors.is_array() || vectors.empty()) {
        throw ParseError("frame must contain at least one vector");
    }
    std::vector<QVector> vs;
    vs.reserve(vectors.size());
    for (const Json& entry : vectors) {
        QVector v = qvector_from_json(entry);
        if (v.size() != dim) {
            throw ParseError("frame vector length differs from dim");
        }
        vs.push_back(std::move(v));
    }
    return make_frame(vs);
}

Json to_json(const SuperFrame& sf) {
    return Json{{"dim1", sf.dim_left()},
                {"dim2", sf.dim_right()},
                {"left", to_json(sf.left)},
                {"right", to_json(sf.right)}};
}

SuperFrame super_frame_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim1") || !j.contains("dim2") ||
        !j.contains("left") || !j.contains("right")) {
        throw ParseError("super frame must carry dim1, dim2, left, and right");
    }
    FrameSystem left = frame_from_json(j.at("left"));
    FrameSystem right = frame_from_json(j.at("right"));
    if (left.dim != j.at("dim1").get<std::size_t>() ||
        right.dim != j.at("dim2").get<std::size_t>()) {
        throw ParseError("super frame component dimensions disagree with dim1/dim2");
    }
    return make_super_frame(left, right);
}

Json to_json(const KFrameReport& report) {
    Json out{{"is_bessel", report.is_bessel},
             {"bessel_bound", report.bessel_bound},
             {"range_residual", report.range_residual},
             {"is_kframe", report.is_kframe},
             {"unbounded", report.unbounded},
             {"tolerance", report.tolerance}};
    if (report.lower_bound) {
        out["lower_bound"] = *report.lower_bound;
    }
    if (report.optimal_lower_bound) {
        out["optimal_lower_bound"] = *report.optimal_lower_bound;
    }
    if (report.factor) {
        out["factor"] = to_json(*report.factor);
    }
    return out;
}

Json to_json(const SuiteReport& report) {
    Json entries = Json::array();
    for (const SuiteEntry& e : report.entries) {
        Json row{{"id", e.id},
                 {"anchor", e.anchor},
                 {"trials", e.trials},
                 {"passes", e.passes},
                 {"worst_residual", e.worst_residual}};
        if (e.witness) {
            row["witness"] = *e.witness;
        }
        entries.push_back(std::move(row));
    }
    return Json{{"seed", report.seed},
                {"trials", report.trials},
                {"tolerance", report.tolerance},
                {"overall", report.overall},
                {"entries", std::move(entries)}};
}

LoadedOperator operator_from_json(const Json& j) {
    LoadedOperator out;
    if (j.is_object() && j.contains("K1") && j.contains("K2")) {
        out.blocks = std::make_pair(qmatrix_from_json(j.at("K1")),
                                    qmatrix_from_json(j.at("K2")));
        return out;
    }
    out.single = qmatrix_from_json(j);
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write file: " + path);
    }
    out << dump_json(j);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace qframes
