#pragma once

#include <iosfwd>
#include <string>

#include "orbital/coherent.hpp"
#include "orbital/iso_set.hpp"
#include "orbital/perm_group.hpp"

namespace orbital {

// Group files:
//   perm-group <n>
//   <generator>        one per line, an image table "0 2 1 ..." or disjoint
//                      cycles "(0 1 2)(3 4)" over 0-based points
// Image tables are always emitted on output.
PermGroup read_group(std::istream& in);
PermGroup read_group_file(const std::string& path);
void write_group(std::ostream& out, const PermGroup& g);

// Scheme files:
//   coherent-config <n> <r>
//   n rows of n color ids in 0..r-1
// Color ids are canonical (diagonal classes first, then by class size and
// smallest member pair), so two runs writing the same configuration agree
// byte for byte.
CoherentConfiguration read_scheme(std::istream& in);
CoherentConfiguration read_scheme_file(const std::string& path);
void write_scheme(std::ostream& out, const CoherentConfiguration& x);

// Relation files (input to the wl command):
//   relations <n> <m>
//   m lines, each an even-length list "a b a b ..." of pair entries
std::vector<BinaryRelation> read_relations(std::istream& in);

// Psi files: one "<color-in-X> <color-in-X'>" line per color, canonical ids.
ColorBijection read_color_bijection(std::istream& in, int rank);

// Iso sets: the count (or SYM n / EMPTY), then one image table per line.
void write_iso_set(std::ostream& out, const IsoSet& s);

Perm parse_permutation(const std::string& line, int degree);

}  // namespace orbital
