#pragma once

#include "patterngf/lattice_path.hpp"
#include "patterngf/permutation.hpp"

namespace patterngf {

/// 132-avoiding permutation -> closed Dyck path of length 2n. Reading pi left
/// to right, each pi_j contributes up-steps to height h_j + 1 and one
/// down-step, where h_j counts the later entries larger than pi_j.
/// Throws PatternViolation when pi contains 132.
LatticePath phi(const Permutation& pi);

/// Same map through the left-to-right minima decomposition
/// pi = m_1 w_1 ... m_s w_s: m_i gives m_{i-1} - m_i up-steps (m_0 = n + 1),
/// w_i gives |w_i| + 1 down-steps.
LatticePath phi_via_minima(const Permutation& pi);

/// Inverse of phi on closed Dyck paths.
Permutation phi_inverse(const LatticePath& p);

/// 123-avoiding permutation -> closed Dyck path, built from the right-to-left
/// maxima decomposition pi = w_s m_s ... w_1 m_1 read from the right
/// (m_i gives m_i - m_{i-1} up-steps, m_0 = 0; w_i gives |w_i| + 1
/// down-steps) and then reflected in a vertical line.
/// Throws PatternViolation when pi contains 123.
LatticePath psi(const Permutation& pi);

Permutation psi_inverse(const LatticePath& p);

/// phi_inverse(psi(pi)): 123-avoiders onto 132-avoiders of the same size.
Permutation convert_123_to_132(const Permutation& pi);

/// Reverse the step order and swap Up with Down.
LatticePath reflect(const LatticePath& p);

}  // namespace patterngf
