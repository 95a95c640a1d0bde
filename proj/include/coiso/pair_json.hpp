#pragma once

// JSON input for user-supplied symmetric pairs:
//   { "name": optional string,
//     "n": ambient matrix size,
//     "g_basis": [ [n*n row-major entries], ... ]   (or nested n x n rows),
//     "theta": [ [d entries], ... d rows ] }
// Entries are "p/q" strings or integers. Column j of theta holds the
// coordinates of theta(b_j).

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "coiso/errors.hpp"
#include "coiso/sympair.hpp"

namespace coiso {

namespace detail {

inline Q json_rational(const nlohmann::json& x, const std::string& where) {
  if (x.is_string()) {
    try {
      return field_traits<Q>::parse(x.get<std::string>());
    } catch (const Error& e) {
      throw InvariantViolation("rational_entry", where + ": " + e.what());
    }
  }
  if (x.is_number_integer()) return Q(x.get<long>());
  throw InvariantViolation("rational_entry", where + ": expected a \"p/q\" string or an integer");
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation("schema", what);
}

inline Matrix<Q> json_basis_element(const nlohmann::json& b, std::size_t n, std::size_t k) {
  const std::string where = "g_basis[" + std::to_string(k) + "]";
  require(b.is_array(), where + " must be an array");
  Matrix<Q> m(n, n);
  if (!b.empty() && b[0].is_array()) {
    if (b.size() != n) throw InvariantViolation("g_basis_shape", where + " must have " + std::to_string(n) + " rows");
    for (std::size_t r = 0; r < n; ++r) {
      require(b[r].is_array(), where + " rows must be arrays");
      if (b[r].size() != n)
        throw InvariantViolation("g_basis_shape", where + " row " + std::to_string(r) + " must have " +
                                                      std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c)
        m(r, c) = json_rational(b[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    return m;
  }
  if (b.size() != n * n)
    throw InvariantViolation("g_basis_shape", where + " must have n*n = " + std::to_string(n * n) + " entries, has " +
                                                  std::to_string(b.size()));
  for (std::size_t i = 0; i < n * n; ++i)
    m(i / n, i % n) = json_rational(b[i], where + "[" + std::to_string(i) + "]");
  return m;
}

}  // namespace detail

/// Parses and fully re-validates a pair; violations raise InvariantViolation
/// naming the failed invariant.
inline SymmetricPair pair_from_json(const nlohmann::json& j) {
  using detail::require;
  require(j.is_object(), "top level must be an object");
  require(j.contains("n") && j["n"].is_number_integer() && j["n"].get<long>() > 0, "\"n\" must be a positive integer");
  require(j.contains("g_basis") && j["g_basis"].is_array() && !j["g_basis"].empty(),
          "\"g_basis\" must be a non-empty array");
  require(j.contains("theta") && j["theta"].is_array(), "\"theta\" must be an array of rows");
  const auto n = static_cast<std::size_t>(j["n"].get<long>());
  std::vector<Matrix<Q>> basis;
  for (std::size_t k = 0; k < j["g_basis"].size(); ++k) basis.push_back(detail::json_basis_element(j["g_basis"][k], n, k));
  const std::size_t d = basis.size();
  const auto& t = j["theta"];
  if (t.size() != d) throw InvariantViolation("theta_shape", "theta must have " + std::to_string(d) + " rows");
  Matrix<Q> theta(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    require(t[r].is_array(), "theta rows must be arrays");
    if (t[r].size() != d)
      throw InvariantViolation("theta_shape", "theta row " + std::to_string(r) + " must have " + std::to_string(d) +
                                                  " entries");
    for (std::size_t c = 0; c < d; ++c)
      theta(r, c) = detail::json_rational(t[r][c], "theta[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  std::string name = "input";
  if (j.contains("name")) {
    require(j["name"].is_string(), "\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  return SymmetricPair(name, MatrixLieAlgebra(n, std::move(basis)), std::move(theta));
}

inline SymmetricPair pair_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvariantViolation("json_syntax", e.what());
  }
  return pair_from_json(j);
}

inline SymmetricPair pair_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return pair_from_json_text(ss.str());
}

inline nlohmann::ordered_json pair_to_json(const SymmetricPair& p) {
  const std::size_t n = p.g().matrix_size();
  nlohmann::ordered_json j;
  j["name"] = p.name();
  j["n"] = n;
  j["g_basis"] = nlohmann::ordered_json::array();
  for (const auto& b : p.g().basis()) {
    nlohmann::ordered_json flat = nlohmann::ordered_json::array();
    for (const auto& x : b.vec()) flat.push_back(field_traits<Q>::to_string(x));
    j["g_basis"].push_back(flat);
  }
  j["theta"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < p.theta().rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < p.theta().cols(); ++c) row.push_back(field_traits<Q>::to_string(p.theta()(r, c)));
    j["theta"].push_back(row);
  }
  return j;
}

}  // namespace coiso
