#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace grouptest {

// Elements in a script are identified by stable ids: the initial table of
// size k holds ids 0..k-1 and every Insert introduces the next unused id.
using ElementId = std::uint64_t;

struct Exchange {
  ElementId a;
  ElementId b;
  ElementId value;
};

// Adds one element. `values` fills its new row, column and diagonal, so it
// must hold exactly 2k+1 entries where k is the size before insertion; they
// may reference the new element itself.
struct Insert {
  std::vector<ElementId> values;
};

struct Delete {
  ElementId element;
};

using EditOp = std::variant<Exchange, Insert, Delete>;

struct EditScript {
  std::vector<EditOp> ops;
};

// Exchange costs 1, Insert 2k+1, Delete 2k-1 with k the size at the time of
// the operation. Throws InputError if the script references absent elements
// or an Insert carries the wrong number of values.
std::uint64_t edit_script_cost(const EditScript& script, std::size_t initial_size);

// j consecutive deletions from a size-n table.
EditScript deletion_script(std::size_t n, std::size_t j);

}  // namespace grouptest
