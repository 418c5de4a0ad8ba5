#pragma once

#include <string>
#include <vector>

namespace latinset::detail {

/// A transcribed order-2^s table: the row-swapped L_s with its greedy
/// critical set in parentheses.
struct BaseTable {
    int s;
    int k, kp;
    std::string text;
};

auto base_tables() -> const std::vector<BaseTable> &;

}
