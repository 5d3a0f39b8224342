#ifndef QROOTS_IO_HPP
#define QROOTS_IO_HPP

#include <iosfwd>
#include <string>

#include "qroots/poly.hpp"

namespace qroots {

/// Polynomial text format: one coefficient per line, ascending degree, each
/// an optionally signed integer or p/q fraction. Blank lines and lines whose
/// first non-space character is '#' are ignored.
Poly read_poly(std::istream& in);
Poly read_poly_file(const std::string& path);
Poly parse_poly_text(const std::string& text);

void write_poly(std::ostream& out, const Poly& p);
std::string poly_to_text(const Poly& p);

}  // namespace qroots

#endif
