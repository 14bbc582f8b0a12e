#pragma once

// JSON input/output: tensor documents, classification reports and the type
// registry. Uses nlohmann::json (vendored single header).

#include "ricci/taxonomy.hpp"

#include <string>
#include <variant>

namespace ricci {

// A parsed input tensor. Rational mode is used when every component is an
// integer or a fraction string like "3/4"; any floating-point component
// switches the whole document to float mode.
struct TensorDocument {
  Tetrad tetrad = Tetrad::Null;
  bool rational = true;
  Mat4<Rat> m_rat{};
  Mat4<double> m_f{};
};

// Parses {"tetrad": "null"|"orthonormal", "components": [[...x4]x4]}.
// The tetrad key is optional when a default is supplied on the command line.
// Throws ClassifyError(BadInput) on malformed documents.
TensorDocument parse_tensor_document(const std::string& text,
                                     std::optional<Tetrad> tetrad_override);

std::string report_to_json(const ClassificationReport& rep, int indent = 2);
std::string report_to_text(const ClassificationReport& rep);
std::string registry_to_json(int indent = 2);

const char* tetrad_name(Tetrad t);

}  // namespace ricci
