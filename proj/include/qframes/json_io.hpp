#pragma once

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

#include "qframes/frames.hpp"
#include "qframes/harness.hpp"
#include "qframes/qmatrix.hpp"
#include "qframes/quaternion.hpp"
#include "qframes/qvector.hpp"
#include "qframes/superspace.hpp"

namespace qframes {

using Json = nlohmann::json;

// Scalars encode as 4-arrays [w, x, y, z]; vectors as arrays of scalars;
// matrices as {"rows", "cols", "data"} with row-major data.

Json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const Json& j);

Json to_json(const QVector& v);
QVector qvector_from_json(const Json& j);

Json to_json(const QMatrix& a);
QMatrix qmatrix_from_json(const Json& j);

/// Frame file: {"dim": n, "vectors": [[...], ...]}.
Json to_json(const FrameSystem& f);
FrameSystem frame_from_json(const Json& j);

/// Super-frame file: {"dim1": n1, "dim2": n2, "left": frame, "right": frame}.
Json to_json(const SuperFrame& sf);
SuperFrame super_frame_from_json(const Json& j);

Json to_json(const KFrameReport& report);
Json to_json(const SuiteReport& report);

/// Operator file: either a plain matrix or a block pair {"K1": ..., "K2": ...}.
struct LoadedOperator {
    std::optional<QMatrix> single;
    std::optional<std::pair<QMatrix, QMatrix>> blocks;
};

LoadedOperator operator_from_json(const Json& j);

/// Parses a JSON document from disk; malformed input raises ParseError with
/// the parser's position diagnostics.
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// Canonical serialization used everywhere (stable across runs).
std::string dump_json(const Json& j);

} // namespace qframes
