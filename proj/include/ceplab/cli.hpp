#pragma once

// Front-end helpers: frame expressions, frame files, element literals and
// lattice export, plus the command dispatcher behind the cep-lab binary.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ceplab/congruence.hpp"
#include "ceplab/frame.hpp"

namespace ceplab {

// expr := 'wheel' N | 'identity' N | 'negation' N
//       | 'complex' PATH | 'table' PATH
//       | 'family' ('A'|'B'|'C') 'x=' EPSET          (whole expression only)
//       | ('star'|'sharp'|'flat'|'neg-op') '(' expr ')'
//       | 'product' '(' expr ',' expr ')'
// Paths are read up to the next ',' or ')' and resolved against the working
// directory.
Frame parse_frame_expression(std::string_view text);

// Line 1 `worlds: a b c`, then `edge: a b` lines.
KripkeFrame parse_kripke(std::string_view text);

// Line 1 `atoms: n`, then `f <hex> <hex>` lines covering every input.
FiniteFrame parse_frame_table(std::string_view text);
std::string format_frame_table(FiniteFrame const& frame);

// Hex (0x..), decimal, or `<a,b>` with a, b each 0 or 1 for the corners of
// a carrier with an even number of atoms.
Element parse_element(FiniteAlgebra const& alg, std::string_view text);

// Hasse diagram of the congruence order, nodes named by hex encoding.
std::string lattice_dot(CongruenceLattice const& lattice);

// Exit codes: 0 as expected, 1 a check deviated, 2 usage error.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace ceplab
