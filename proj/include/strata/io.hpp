#pragma once

#include <iosfwd>
#include <string>

#include "strata/signature.hpp"
#include "strata/tracer.hpp"

namespace strata {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structured text form of a signature:
//   signature v1
//   degree D
//   blue a-b a-b ...
//   red a-b a-b ...
//   pencil a-b a-b ...       (one line per pencil; color is implied)
// Chords are written lo-hi and sorted, so the document is canonical.
void write_signature(const Signature& s, std::ostream& os);
std::string write_signature(const Signature& s);
Signature read_signature(std::istream& is);
Signature read_signature(const std::string& text);

// Deterministic SVG pictures: unit circle, labeled boundary points,
// chords as arcs, pencil vertices as colored dots, crossings as black
// dots.  Identical input yields identical bytes.
std::string render_signature(const Signature& s);

// Drawing render: traced curves, roots, asymptotic sector guides.
std::string render_drawing(const Drawing& drawing);

}  // namespace strata
