#pragma once

#include <string>
#include <vector>

#include "exbraid/rootdata.hpp"

namespace exbraid {

// Two numberings are in play. Internal weights use Bourbaki node order.
// "Vector-first" labels l1..lN put the smallest nontrivial representation
// at l1 (F4 reversed; E7 and E8 swap nodes 1 and N). The table lives in
// data/labels.json.

// 1-based vector-first index -> 1-based internal index.
std::size_t internal_index(Algebra a, std::size_t label);
std::size_t label_index(Algebra a, std::size_t internal);
long l1_dimension(Algebra a);

Weight from_labels(Algebra a, const std::vector<int>& label_coords);
std::vector<int> to_labels(Algebra a, const Weight& w);
// "0", "l1", "2l1+l4" in vector-first numbering.
std::string label_string(Algebra a, const Weight& w);

// Accepts coordinates ("0,0,0,1", "(0,0,0,1)"; internal numbering) or a
// label expression ("l1", "l1+l4", "2l1"; vector-first numbering).
// Throws PreconditionError on malformed input.
Weight parse_object(Algebra a, const std::string& text);

}  // namespace exbraid
