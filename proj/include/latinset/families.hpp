#pragma once

#include <latinset/pls.hpp>

#include <string>
#include <utility>
#include <vector>

namespace latinset {

/// A swap pair or recursion level outside the domain of a construction.
class KeyError : public Error {
public:
    using Error::Error;
};

auto in_gamma(int k, int kp) -> bool;
auto in_lambda(int k, int kp) -> bool;

/// k < k' < 2^s, k' - k < 3 and both in one aligned block of four rows.
auto satisfies_swap_guard(int k, int kp, int s) -> bool;

/// k < k' < 2^s and k' - k < 3, with no block condition.
auto satisfies_weak_swap_guard(int k, int kp, int s) -> bool;

auto gamma_pairs() -> std::vector<std::pair<int, int>>;
auto lambda_pairs() -> std::vector<std::pair<int, int>>;

/// Transcribed greedy critical sets of the row-swapped L_2 (pairs in Λ)
/// and L_3 (pairs in Γ ∪ Λ), and the grid text they were parsed from.
auto base_gcs_L2(int k, int kp) -> PartialLatinSquare;
auto base_gcs_L3(int k, int kp) -> PartialLatinSquare;
auto base_table_text(int s, int k, int kp) -> std::string;

/// Top-left 4x4 quadrant of base_gcs_L3(k, kp), for (k, kp) in Γ and Λ.
auto base_E2(int k, int kp) -> PartialLatinSquare;
auto base_A2(int k, int kp) -> PartialLatinSquare;

/// Order 2^m, with absolute row indices 2^m <= k < k' < 2^{m+1}.
auto build_E(int k, int kp, int m) -> PartialLatinSquare;

/// Order 2^m, with absolute row indices 0 <= k < k' < 2^m.
auto build_A(int k, int kp, int m) -> PartialLatinSquare;

/// The recursive critical set of L_s with rows k and kp swapped.
auto build_G(int k, int kp, int s) -> PartialLatinSquare;

/// [E^0, P_2^1; E^1, P_2^0] and [E^0, P_2^1; P_2^1, E^0] with E = E(k,k')_2.
auto build_U(int k, int kp) -> PartialLatinSquare;
auto build_V(int k, int kp) -> PartialLatinSquare;

/// No cell of the top-left quadrant of U can take a symbol from 4..7.
auto check_blocking_U(int k, int kp) -> bool;

/// No cell of the top-right quadrant of V can take a symbol from 0..3.
auto check_blocking_V(int k, int kp) -> bool;

/// Every aligned 4x4 block of build_E(k, kp, m) is similar to L_2 or to
/// E(l, l')_2 for some (l, l') in Γ.
auto e_blocks_structured(int k, int kp, int m) -> bool;

/// One node of the recursive definition of G, E or A. Leaves are base
/// tables and the P, L and row-swapped L blocks.
struct ExpansionNode {
    enum class Kind { G, E, A, P, L, swapped_L };

    Kind kind = Kind::G;
    int k = 0, kp = 0;
    /// s for G, the order exponent for E, A, P and L.
    int level = 0;
    int shift = 0;
    std::vector<ExpansionNode> children;

    auto is_leaf() const -> bool { return children.empty(); }
    /// Name without the shift, e.g. "E(60,62)_5", "G(28,30,5)" or
    /// "aL(1,3)_2" for L_2 with rows 1 and 3 swapped.
    auto name() const -> std::string;
};

/// Throws KeyError when (k, kp, s) fails the swap guard.
auto expansion_trace(int k, int kp, int s) -> ExpansionNode;

/// One line per distinct non-leaf definition (G first, then E and A, by
/// decreasing level), followed by the base cases used.
auto render_trace(const ExpansionNode & root) -> std::string;

}
