#pragma once

#include "json.hpp"
#include "stairtab/genfunc.hpp"
#include "stairtab/jdt.hpp"
#include "stairtab/poly.hpp"
#include "stairtab/tableau.hpp"

namespace stairtab {

using Json = nlohmann::ordered_json;

// Tableau schema: {"outer":[..],"inner":[..],"entries":[{"row":r,"col":c,
// "value":v[,"primed":b]}..]} with entries sorted row-major; GST entries
// omit "primed".
Json to_json(const GstTableau& t);
Json to_json(const QTableau& t);
GstTableau gst_from_json(const Json& j);
QTableau qtab_from_json(const Json& j);

// Polynomial schema: [{"coeff":c,"x":[e1..em],"t":k,"r":j}..] sorted by
// (t, r) ascending then x-exponents lexicographically descending.
Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, int fallback_num_vars = 0);

// Expansion schema: [{"nu":[..],"coeff":<polynomial>}..] with nu in
// lexicographically descending order.
Json to_json(const SchurExpansion& e);

Json to_json(const SlideResult& s);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

}  // namespace stairtab
