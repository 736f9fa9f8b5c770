#pragma once

#include <cstdint>

namespace orbital {

// Resource caps. Defaults can be overridden through environment variables
// (read once, on first use):
//
//   ORBITAL_ELEMENT_CAP     max number of group elements enumerated (10000000)
//   ORBITAL_AUT_ORACLE_CAP  max degree for the automorphism oracle (30)
//   ORBITAL_ISO_ORACLE_CAP  max degree for the isomorphism oracle (21)
//   ORBITAL_TUPLE_BUDGET    max number of k-tuples visited (2000000)

std::uint64_t element_cap();
int aut_oracle_cap();
int iso_oracle_cap();
std::uint64_t tuple_budget();

}  // namespace orbital
