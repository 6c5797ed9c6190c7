#include "grouptest/edit_script.hpp"

#include <string>
#include <unordered_set>

#include "grouptest/errors.hpp"

namespace grouptest {

std::uint64_t edit_script_cost(const EditScript& script, std::size_t initial_size) {
  std::unordered_set<ElementId> live;
  for (ElementId id = 0; id < initial_size; ++id) live.insert(id);
  ElementId next_id = initial_size;
  std::uint64_t cost = 0;

  auto require = [&](ElementId id, std::size_t step) {
    if (!live.contains(id)) {
      throw InputError("edit script step " + std::to_string(step) + " references absent element " +
                       std::to_string(id));
    }
  };

  for (std::size_t step = 0; step < script.ops.size(); ++step) {
    const std::uint64_t k = live.size();
    const EditOp& op = script.ops[step];
    if (const auto* ex = std::get_if<Exchange>(&op)) {
      require(ex->a, step);
      require(ex->b, step);
      require(ex->value, step);
      cost += 1;
    } else if (const auto* ins = std::get_if<Insert>(&op)) {
      if (ins->values.size() != 2 * k + 1) {
        throw InputError("edit script step " + std::to_string(step) + ": insert at size " +
                         std::to_string(k) + " needs " + std::to_string(2 * k + 1) + " values");
      }
      const ElementId fresh = next_id++;
      live.insert(fresh);
      for (ElementId v : ins->values) require(v, step);
      cost += 2 * k + 1;
    } else {
      const auto& del = std::get<Delete>(op);
      require(del.element, step);
      live.erase(del.element);
      cost += 2 * k - 1;
    }
  }
  return cost;
}

EditScript deletion_script(std::size_t n, std::size_t j) {
  if (j > n) throw InputError("cannot delete more elements than the table holds");
  EditScript script;
  for (std::size_t i = 0; i < j; ++i) script.ops.emplace_back(Delete{n - 1 - i});
  return script;
}

}  // namespace grouptest
