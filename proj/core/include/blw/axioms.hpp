#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace blw {

/// The fourteen axiom schemas of the Hilbert system:
///   A1  phi -> phi
///   A2  (phi -> psi) -> ((psi -> chi) -> (phi -> chi))
///   A3  (phi * psi) -> (psi * phi)
///   A4  (phi * psi) -> psi
///   A5  (phi -> (psi -> chi)) -> ((phi * psi) -> chi)
///   A6  ((phi * psi) -> chi) -> (phi -> (psi -> chi))
///   A7  (phi * (phi -> psi)) -> (phi & psi)
///   A8  (phi & psi) -> (phi * (phi -> psi))
///   A9  (phi & psi) -> (psi & phi)
///   A10 phi -> (phi | psi)
///   A11 psi -> (phi | psi)
///   A12 ((phi -> psi) & (chi -> psi)) -> ((phi | chi) -> psi)
///   A13 bot -> phi
///   A14 (phi -> psi) | (psi -> phi)
enum class AxiomId {
  A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12, A13, A14,
};

inline constexpr int kAxiomCount = 14;

std::string axiom_name(AxiomId id);
std::optional<AxiomId> axiom_from_name(std::string_view name);

}  // namespace blw
