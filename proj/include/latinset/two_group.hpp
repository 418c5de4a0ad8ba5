#pragma once

#include <latinset/pls.hpp>

#include <span>

namespace latinset {

/// Cayley table of the elementary abelian group of order 2^s, built by
/// repeated doubling from L_1. Entry (i, j) is i xor j.
auto build_L(int s) -> PartialLatinSquare;

/// P_1 = {(0,0;0)}; P_s = [L_{s-1}, P_{s-1}^1; P_{s-1}^1, P_{s-1}].
auto build_P(int s) -> PartialLatinSquare;

/// [M, M^1; M^1, M] for a full square M.
auto double_square(const PartialLatinSquare & m) -> PartialLatinSquare;

/// [M, C^1; C^1, C]. Throws ConflictError if C is not contained in M.
auto doubling_seed(const PartialLatinSquare & m, const PartialLatinSquare & c) -> PartialLatinSquare;

/// The seven-entry critical set of L_2 with rows 1 and 2 swapped, and that
/// swapped square itself.
auto build_H2() -> PartialLatinSquare;
auto build_H2_hat() -> PartialLatinSquare;

/// L_s with rows k and kp exchanged.
auto swapped_L(int s, int k, int kp) -> PartialLatinSquare;

/// L_s with rows 4b+1 and 4b+2 exchanged for every b in blocks.
auto multiswap_L(int s, std::span<const int> blocks) -> PartialLatinSquare;

/// Critical set of multiswap_L(s, blocks) assembled block by block from
/// P_s, H_2 and Ĥ_2. Throws RangeError unless s >= 2 and every block index
/// is in 0..2^{s-2}-1 (duplicates rejected).
auto build_multiswap_G(int s, std::span<const int> blocks) -> PartialLatinSquare;

/// Every entry pair (i,j;k), (i,j';k') of L_s with j < n/2 <= j' extends to
/// an intercalate through some row i' in the other half of the rows.
auto intercalates_cross_halves(int s) -> bool;

}
