#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gersh/matrix.hpp"

namespace gersh {

/// Reads the JSON matrix format {"n": N, "entries": [[re, im], ...]} with
/// N*N row-major entries. Errors are InputError with line/column or field
/// context, e.g. "expected 4 entries".
ComplexMatrix parse_matrix(const std::filesystem::path& path);
ComplexMatrix parse_matrix_text(std::string_view text);

/// Canonical serialization: one line, shortest round-trip numbers, trailing
/// newline. parse_matrix_text(serialize_matrix(m)) == m.
std::string serialize_matrix(const ComplexMatrix& m);

/// Shortest decimal that round-trips to `x` ("0.25", "1", "-3e-07").
std::string format_number(double x);

}  // namespace gersh
