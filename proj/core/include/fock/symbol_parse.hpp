#pragma once

#include <string>
#include <string_view>

#include "fock/symbols.hpp"

namespace fock {

/// Parses the symbol mini-language (see docs/symbol-language.md):
///
///   radial:const:<c>            radial:pow:<k>           radial:ind:<R>
///   radial:pw:<edges>|<values>|<tail>
///   radial:rat:<a>,<b>[,<scale>]
///   radial:samp:<radii>|<values>     radial:file:<csv path>
///   weyl:<z>      measure:[(re,im,w);...]      trans:<z>:<symbol>
///   general:re    general:dir    general:half:<x0>
///
/// Complex literals are `a`, `bi`, `a+bi` or `a-bi`. Throws ParseError
/// carrying the byte offset of the offending token.
Symbol parse_symbol(std::string_view spec);

/// Canonical text form; parse_symbol(print_symbol(s)) reproduces s.
std::string print_symbol(const Symbol& s);

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double x);
std::string format_complex(cplx z);

}  // namespace fock
