/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef POSMAP_JSON_IO_HPP
#define POSMAP_JSON_IO_HPP

#include <string>

#include "posmap/linmap.hpp"
#include "posmap/schmidt.hpp"
#include "posmap/states.hpp"

namespace posmap {

// Reals are serialized with 17 significant digits so round trips are
// lossless; complex numbers as [re, im] pairs. Emission uses a fixed key
// order, so equal values produce byte-identical documents.
std::string format_real(double x);

// Choi matrix file format:
//   { "dim_k": int, "dim_h": int, "choi": [[re, im], ...] }
// row-major, length (dimK*dimH)^2.
std::string choi_to_json(const LinMap &phi);
LinMap choi_from_json(const std::string &text); // throws InvalidInput
LinMap load_choi_file(const std::string &path);
void save_choi_file(const LinMap &phi, const std::string &path);

// Plain matrix format: { "rows": int, "cols": int, "entries": [[re, im], ...] }.
std::string matrix_to_json(const CMatrix &m);
CMatrix matrix_from_json(const std::string &text);
CMatrix load_matrix_file(const std::string &path);

// Witness formats. A Schmidt vector is either factored
//   { "type": "schmidt_vector", "dim_k", "dim_h", "k", "left": [[...]], "right": [[...]] }
// or parsed from a dense { "dim_k", "dim_h", "amplitudes": [[re, im], ...] }.
std::string schmidt_vector_to_json(const SchmidtVector &v);
SchmidtVector schmidt_vector_from_json(const std::string &text, const Tolerances &tol = {});

std::string state_to_json(const StateDensity &s);
StateDensity state_from_json(const std::string &text, const Tolerances &tol = {});

// 64-bit FNV-1a of a byte string, as fixed-width hex.
std::string fnv1a_hex(const std::string &bytes);

std::string read_file(const std::string &path); // throws InvalidInput when unreadable
void write_file(const std::string &path, const std::string &content);

} // namespace posmap

#endif
