#include "base_tables.hpp"

namespace latinset::detail {

auto base_tables() -> const std::vector<BaseTable> &
{
    static const std::vector<BaseTable> tables{
        {2, 0, 1, R"grid(
  1 (0) (3)   2
(0) (1)   2   3
(2)   3 (0)   1
  3   2   1   0
)grid"},
        {2, 0, 2, R"grid(
(2)   3 (0)   1
  1 (0) (3)   2
(0) (1)   2   3
  3   2   1   0
)grid"},
        {2, 0, 3, R"grid(
(3) (2) (1)   0
(1)   0 (3)   2
(2) (3)   0   1
  0   1   2   3
)grid"},
        {2, 1, 2, R"grid(
(0) (1) (2)   3
(2)   3 (0)   1
(1) (0)   3   2
  3   2   1   0
)grid"},
        {2, 1, 3, R"grid(
(0)   1 (2)   3
  3 (2) (1)   0
(2) (3)   0   1
  1   0   3   2
)grid"},
        {2, 2, 3, R"grid(
  0 (1) (2)   3
(1) (0)   3   2
(3)   2 (1)   0
  2   3   0   1
)grid"},
        {3, 0, 1, R"grid(
  1 (0) (3) (2)   5 (4) (7)   6
(0) (1) (2) (3) (4) (5)   6   7
(2) (3) (0) (1) (6)   7 (4)   5
(3) (2) (1) (0)   7   6   5   4
(4) (5) (6)   7 (0) (1) (2)   3
(5) (4)   7   6 (1) (0)   3   2
(6)   7 (4)   5 (2)   3 (0)   1
  7   6   5   4   3   2   1   0
)grid"},
        {3, 0, 2, R"grid(
(2) (3) (0) (1) (6)   7 (4)   5
  1 (0) (3) (2)   5 (4) (7)   6
(0) (1) (2) (3) (4) (5)   6   7
(3) (2) (1) (0)   7   6   5   4
(4) (5) (6)   7 (0) (1) (2)   3
(5) (4)   7   6 (1) (0)   3   2
(6)   7 (4)   5 (2)   3 (0)   1
  7   6   5   4   3   2   1   0
)grid"},
        {3, 0, 3, R"grid(
(3)   2   1 (0) (7) (6) (5)   4
  1 (0)   3 (2) (5)   4 (7)   6
  2   3 (0) (1) (6) (7)   4   5
(0) (1) (2) (3)   4   5   6   7
(4) (5) (6)   7 (0) (1) (2)   3
(5) (4)   7   6 (1) (0)   3   2
(6)   7 (4)   5 (2)   3 (0)   1
  7   6   5   4   3   2   1   0
)grid"},
        {3, 1, 2, R"grid(
(0) (1) (2) (3) (4) (5) (6)   7
(2) (3) (0) (1) (6)   7 (4)   5
(1) (0) (3) (2) (5) (4)   7   6
(3) (2) (1) (0)   7   6   5   4
(4) (5) (6)   7 (0) (1) (2)   3
(5) (4)   7   6 (1) (0)   3   2
(6)   7 (4)   5 (2)   3 (0)   1
  7   6   5   4   3   2   1   0
)grid"},
        {3, 1, 3, R"grid(
(0) (1) (2) (3) (4)   5 (6)   7
(3)   2   1 (0)   7 (6) (5)   4
  2   3 (0) (1) (6) (7)   4   5
(1) (0) (3) (2)   5   4   7   6
(4) (5) (6)   7 (0) (1) (2)   3
(5) (4)   7   6 (1) (0)   3   2
(6)   7 (4)   5 (2)   3 (0)   1
  7   6   5   4   3   2   1   0
)grid"},
        {3, 2, 3, R"grid(
(0) (1) (2) (3)   4 (5) (6)   7
(1) (0) (3) (2) (5) (4)   7   6
  3 (2)   1 (0) (7)   6 (5)   4
(2) (3) (0) (1)   6   7   4   5
(4) (5) (6)   7 (0) (1) (2)   3
(5) (4)   7   6 (1) (0)   3   2
(6)   7 (4)   5 (2)   3 (0)   1
  7   6   5   4   3   2   1   0
)grid"},
        {3, 4, 5, R"grid(
(0) (1)   2 (3) (4) (5) (6)   7
(1) (0) (3) (2) (5) (4)   7   6
(2) (3) (0) (1) (6)   7 (4)   5
(3) (2) (1) (0)   7   6   5   4
  5 (4) (7)   6   1 (0) (3)   2
(4) (5)   6   7 (0) (1)   2   3
(6)   7 (4)   5 (2)   3 (0)   1
  7   6   5   4   3   2   1   0
)grid"},
        {3, 4, 6, R"grid(
(0) (1)   2 (3) (4) (5) (6)   7
(1) (0) (3) (2) (5) (4)   7   6
(2) (3) (0) (1) (6)   7 (4)   5
(3) (2) (1) (0)   7   6   5   4
(6)   7 (4)   5 (2)   3 (0)   1
  5 (4) (7)   6   1 (0) (3)   2
(4) (5)   6   7 (0) (1)   2   3
  7   6   5   4   3   2   1   0
)grid"},
        {3, 5, 6, R"grid(
(0) (1) (2) (3) (4) (5) (6)   7
(1) (0) (3) (2) (5) (4)   7   6
(2) (3) (0) (1) (6)   7 (4)   5
(3) (2) (1) (0)   7   6   5   4
(4) (5) (6)   7 (0) (1) (2)   3
(6)   7 (4)   5 (2)   3 (0)   1
(5) (4)   7   6 (1) (0)   3   2
  7   6   5   4   3   2   1   0
)grid"},
        {3, 5, 7, R"grid(
(0)   1 (2) (3) (4) (5) (6)   7
  1   0 (3) (2) (5) (4)   7   6
(2) (3) (0) (1) (6)   7 (4)   5
(3) (2) (1) (0)   7   6   5   4
(4)   5 (6)   7 (0)   1 (2)   3
  7 (6) (5)   4   3 (2) (1)   0
(6) (7)   4   5 (2) (3)   0   1
  5   4   7   6   1   0   3   2
)grid"},
        {3, 6, 7, R"grid(
  0 (1) (2) (3) (4) (5) (6)   7
(1) (0) (3) (2) (5) (4)   7   6
  2 (3)   0 (1) (6)   7 (4)   5
(3) (2) (1) (0)   7   6   5   4
  4 (5) (6)   7   0 (1) (2)   3
(5) (4)   7   6 (1) (0)   3   2
(7)   6 (5)   4 (3)   2 (1)   0
  6   7   4   5   2   3   0   1
)grid"},
    };
    return tables;
}

}
