#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "toroidal/rational.hpp"

namespace toroidal {

using Json = nlohmann::json;

/// Input-data problem (malformed file, unknown label, bad arity, forbidden parameter).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("expected a rational (integer or \"p/q\" string), got " + j.dump());
}

inline Json rational_to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace toroidal
