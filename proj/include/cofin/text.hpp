#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "cofin/congruence.hpp"
#include "cofin/phom.hpp"

// Textual element grammar (whitespace between tokens is ignored):
//
//   rational := ['-'] digits ['/' digits]
//   pl       := 'aff(' rational ',' rational ')'
//             | 'pl(' rational ';' knot {',' knot} ';' rational ')'
//   knot     := '(' rational ',' rational ')'
//   set      := '{' [rational {',' rational}] '}'
//   elem     := 'phom(' pl ';' set ')'
//   pair     := 'pair(' pl ';' set ')'
//
// Printing is canonical: reduced rationals, integers without "/1", sets
// ascending, no whitespace. Parsing accepts sets in any order.

namespace cofin {

Rat parse_rational(std::string_view text);
PLHomeo parse_pl(std::string_view text);
CofinSet parse_set(std::string_view text);
PHom parse_element(std::string_view text);
GSPair parse_pair(std::string_view text);

std::string format(const Rat& r);
std::string format(const PLHomeo& f);
std::string format(const CofinSet& s);
std::string format(const PHom& a);
std::string format(const GSPair& p);

std::ostream& operator<<(std::ostream& os, const PLHomeo& f);
std::ostream& operator<<(std::ostream& os, const CofinSet& s);
std::ostream& operator<<(std::ostream& os, const PHom& a);
std::ostream& operator<<(std::ostream& os, const GSPair& p);

}  // namespace cofin
