#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qlat/formula.hpp"

namespace qlat {

/// Distribution test formula (a | b) & (~a | ~b) where a = p | (q & r)
/// and b = (p | q) & (p | r). It vanishes exactly when the distributive
/// law holds at (p, q, r).
Formula alpha(const Formula& p, const Formula& q, const Formula& r);
/// alpha over the variables p, q, r.
Formula alpha();

/// Variable names {p<k>, q<k>, r<k>} used by level k of the alpha tower.
std::array<std::string, 3> alpha_level_vars(std::size_t level);

/// Iterated alpha: level 1 is alpha(p1, q1, r1) and level k is
/// alpha(pk, qk, rk) restricted to level k - 1. Throws on m == 0.
Formula alpha_iter(std::size_t m);

/// All levels 1..m of the alpha tower; element k - 1 is alpha_iter(k) and
/// the levels share subtrees.
std::vector<Formula> alpha_tower(std::size_t m);

/// x & (y0 | ... | ym) = OR_i (x & OR_{j != i} yj) over x, y0..ym.
/// Holds in C^n exactly when n <= m. Throws on m == 0.
Equation m_distributive(std::size_t m);

/// Names accepted by law(): distributivity, modularity, orthomodularity,
/// de_morgan, de_morgan_dual, double_negation, excluded_middle,
/// non_contradiction.
const std::vector<std::string>& law_names();
/// Throws PreconditionError for an unknown name.
Equation law(std::string_view name);

/// Nested alpha whose value is 0 whenever two of the listed variables
/// denote the same subspace. For k = 4 this is
/// alpha(alpha(alpha(alpha(p, q, r), p, s), q, s), r, s); each further
/// variable is folded through one alpha against every earlier variable.
/// Requires at least three names.
Formula distinctness_formula(const std::vector<std::string>& names);

}  // namespace qlat
