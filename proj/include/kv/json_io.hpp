#pragma once

#include <string>

#include <json.hpp>

#include "kv/conjugacy.hpp"
#include "kv/kv.hpp"
#include "kv/rootdata.hpp"

namespace kv {

using json = nlohmann::json;

/// {"num": n, "den": d}.
json to_json(const Rational& q);
/// {"num": [..], "den": d} with a common denominator.
json to_json(const Coweight& c);

/// Accepts {"num", "den"}, an integer, or a "p/q" string. `field` names the
/// location for error messages.
Rational rational_from_json(const json& j, const std::string& field);
/// Accepts {"num": [..], "den": d} or a plain array of integers / "p/q" strings.
Coweight coweight_from_json(const json& j, std::size_t rank, const std::string& field);

/// "sc", "adjoint" or "custom:<file>" where the file holds an array of integer
/// vectors in fundamental-coweight coordinates.
IsogenySpec isogeny_from_flag(const std::string& flag);
/// A string as above (without custom:) or an inline generator array.
IsogenySpec isogeny_from_json(const json& j, const std::string& field);

/// Class datum file format:
///   {"type": "A2", "isogeny": "sc", "w": [1,2], "e": 3,
///    "nu_bar": {"num": [1,1], "den": 3},
///    "residual": [{"root": [1,0], "val": {"num": 1, "den": 3}}],
///    "kappa": [0]}
/// w is a one-based word; residual roots are positive roots in simple-root coordinates.
ClassDatum class_datum_from_json(const json& j, bool allow_e6 = false);
ClassDatum load_class_datum(const std::string& path, bool allow_e6 = false);
json to_json(const ClassDatum& cd);

json to_json(const KVReport& r);
KVReport report_from_json(const json& j);

}  // namespace kv
