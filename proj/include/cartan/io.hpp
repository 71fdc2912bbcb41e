#pragma once

#include <algorithm>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartan/barratt_eccles.hpp"
#include "cartan/cochain.hpp"
#include "cartan/errors.hpp"
#include "cartan/permutation.hpp"
#include "cartan/surjection.hpp"

namespace cartan::io {

using nlohmann::json;

inline json face_to_json(const Face& f) { return f.vertices(); }

/// {"ambient": n, "dim": m, "support": [[v...], ...]}, support sorted.
inline json cochain_to_json(const Cochain& c) {
  json support = json::array();
  for (const auto& f : c.support()) support.push_back(face_to_json(f));
  return json{{"ambient", c.ambient()}, {"dim", c.dim()}, {"support", std::move(support)}};
}

inline std::string dump(const json& j) { return j.dump(); }

namespace detail {

inline int require_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

inline std::vector<int> require_int_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(require_int(v, what));
  return out;
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace detail

inline Cochain cochain_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("cochain must be a JSON object");
  for (const char* key : {"ambient", "dim", "support"})
    if (!j.contains(key)) throw ParseError(std::string("cochain is missing \"") + key + "\"");
  const int ambient = detail::require_int(j.at("ambient"), "ambient");
  const int dim = detail::require_int(j.at("dim"), "dim");
  const json& support = j.at("support");
  if (!support.is_array()) throw ParseError("support must be an array of faces");
  std::vector<Face> faces;
  for (const auto& f : support) {
    std::vector<int> v = detail::require_int_array(f, "face vertex");
    try {
      faces.emplace_back(std::move(v));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad face: ") + e.what());
    }
  }
  return Cochain(ambient, dim, std::move(faces));
}

inline Cochain parse_cochain(const std::string& text) { return cochain_from_json(detail::parse_text(text)); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Cochain load_cochain(const std::string& path) { return parse_cochain(read_file(path)); }

inline Permutation permutation_from_json(const json& j) {
  std::vector<int> images = detail::require_int_array(j, "permutation entry");
  if (images.empty()) throw ParseError("empty permutation");
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// [[1,3,2,4],[1,2,3,4],[2,1,4,3]]: a tuple of permutations in one-line notation.
inline BESimplex be_simplex_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("a Barratt-Eccles simplex is a nonempty array of permutations");
  std::vector<Permutation> tuple;
  for (const auto& p : j) tuple.push_back(permutation_from_json(p));
  BESimplex e(std::move(tuple));
  try {
    be_arity(e);
  } catch (const ShapeMismatch& err) {
    throw ParseError(err.what());
  }
  return e;
}

inline BESimplex parse_be_simplex(const std::string& text) { return be_simplex_from_json(detail::parse_text(text)); }

inline json be_simplex_to_json(const BESimplex& e) {
  json out = json::array();
  for (const auto& p : e.vertices()) out.push_back(p.images());
  return out;
}

/// A surjection given as a JSON array; the arity is the largest entry unless given.
inline Surjection surjection_from_json(const json& j, int arity = 0) {
  std::vector<int> seq = detail::require_int_array(j, "surjection entry");
  if (seq.empty()) throw ParseError("empty surjection");
  if (arity == 0) arity = *std::max_element(seq.begin(), seq.end());
  try {
    return Surjection(arity, std::move(seq));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline Surjection parse_surjection(const std::string& text, int arity = 0) {
  return surjection_from_json(detail::parse_text(text), arity);
}

/// "(1,2,4,1,4,3) + (1,3,2,3,4,3)", or "0".
inline std::string format_surjections(const SurChain& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& s : c) {
    if (!out.empty()) out += " + ";
    out += s.to_string();
  }
  return out;
}

inline json surjections_to_json(const SurChain& c) {
  json out = json::array();
  for (const auto& s : c) out.push_back(s.sequence());
  return out;
}

/// "((23), e, (12)(34)) + ..." in cycle notation, or "0".
inline std::string format_be_chain(const BEChain& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& e : c) {
    if (!out.empty()) out += " + ";
    out += '(';
    for (std::size_t k = 0; k < e.vertices().size(); ++k) {
      if (k) out += ", ";
      out += e[k].cycles();
    }
    out += ')';
  }
  return out;
}

inline std::string format_monomials(const F2Sum<Monomial>& m, std::span<const std::string> names) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& t : m) {
    if (!out.empty()) out += " + ";
    out += t.to_string(names);
  }
  return out;
}

}  // namespace cartan::io
