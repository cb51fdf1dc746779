#include "blw/axioms.hpp"

namespace blw {

std::string axiom_name(AxiomId id) {
  return "A" + std::to_string(static_cast<int>(id) + 1);
}

std::optional<AxiomId> axiom_from_name(std::string_view name) {
  for (int i = 0; i < kAxiomCount; ++i) {
    const AxiomId id = static_cast<AxiomId>(i);
    if (axiom_name(id) == name) return id;
  }
  return std::nullopt;
}

}  // namespace blw
