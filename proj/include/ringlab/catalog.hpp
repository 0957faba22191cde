#pragma once

#include "ringlab/spec_parser.hpp"

namespace ringlab {

// A named instance: either a grammar spec or an explicit-table import.
struct CatalogEntry {
    std::string name;
    std::string spec;   // grammar text; empty for table entries
    std::string table;  // explicit table text; empty for grammar entries
};

const std::vector<CatalogEntry>& catalog();

BuiltSpec build_catalog_entry(const CatalogEntry& entry, const RingCaps& caps = {});

// The 8-element local ring F2[x,y]/(x,y)^2, whose maximal ideal needs two
// generators: the standard non-Bezout example.
RingPtr f2_xy_square_zero(const RingCaps& caps = {});

}  // namespace ringlab
