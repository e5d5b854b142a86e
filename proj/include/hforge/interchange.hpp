#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hforge/drawing.hpp"
#include "hforge/general_drawing.hpp"

namespace hforge {

using DrawingVariant = std::variant<MultigraphDrawing, GeneralDrawing>;

// JSON text, 2-space indent, trailing newline. Field order is fixed, so
// equal drawings serialize to identical bytes.
std::string drawing_json(const MultigraphDrawing& d);
std::string drawing_json(const GeneralDrawing& d);
std::string drawing_json(const DrawingVariant& d);

// Inverse of drawing_json; the top-level "format" field selects the
// variant. Structural problems throw ParseError; the decoded drawing is
// validated like any constructed one.
DrawingVariant parse_drawing(const std::string& text);

DrawingVariant load_drawing(const std::string& path);            // IoFailure
void save_text(const std::string& path, const std::string& text);  // IoFailure
std::string load_text(const std::string& path);                  // IoFailure

// One sequence per line, '-', '0', '+', '*' alphabet, trailing newline.
std::string sequences_text(const std::vector<Sequence>& seqs);
std::vector<Sequence> parse_sequences(const std::string& text);  // ParseError

}  // namespace hforge
