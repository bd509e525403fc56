#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "magtri/cochains.hpp"
#include "magtri/complex.hpp"

namespace magtri {

/// Malformed document: bad JSON, schema mismatch, duplicate cells, unknown
/// vertex ids.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Well-formed document describing an invalid complex; carries the full
/// violation list from validate().
struct ValidationError : std::runtime_error {
  explicit ValidationError(std::vector<Violation> v);
  std::vector<Violation> violations;
};

/// Canonical document text: vertices sorted by id, edges with u < v sorted
/// lexicographically, faces rotated to their smallest id and sorted; numbers
/// printed with 17 significant digits so save . load is the identity on
/// canonical documents, byte for byte.
std::string to_document(const MagneticTriangulation& mt);

/// Parses a document without validating the complex invariants (parse errors
/// still throw). Lets callers report violations instead of failing.
MagneticTriangulation parse_document(const std::string& text);

/// parse_document followed by validate(); throws ValidationError when the
/// complex breaks an invariant.
MagneticTriangulation load_document(const std::string& text);

MagneticTriangulation load_file(const std::string& path);
void save_file(const MagneticTriangulation& mt, const std::string& path);

/// Cochain serialization: {"degree": k, "values": {"v:a": [re, im], ...}}
/// with keys "v:<id>", "e:<tail>,<head>", "f:<a>,<b>,<c>" over canonical
/// cells in canonical order.
std::string cochain_to_json(const WeightedTriangulation& T, int degree,
                            const Eigen::VectorXcd& values);
/// Inverse of cochain_to_json; missing cells read as zero, unknown keys or a
/// degree mismatch throw ParseError.
Eigen::VectorXcd cochain_from_json(const WeightedTriangulation& T, int degree,
                                   const std::string& text);

}  // namespace magtri
