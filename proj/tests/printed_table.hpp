#pragma once

// Transcription of the printed table of asymmetry types for anticontinuant values
// 1..6, exactly as printed (row order within a cell is not meaningful).

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace golden {

struct Row {
    int value;
    const char* parity;
    std::set<std::string> types;  // rendered "(c ; x)"
    std::set<std::pair<int, int>> exceptions;
};

inline const std::vector<Row>& printed_table() {
    static const std::vector<Row> rows{
        {1, "even", {"(1 ;)"}, {}},
        {1, "odd", {"(1 ; 1)"}, {}},
        {2, "even", {"(2 ;)", "(1 ; p,1)"}, {}},
        {2, "odd", {"(1 ; 2)", "(2 ; 1)"}, {{2, 1}}},
        {3, "even", {"(3 ;)"}, {}},
        {3, "odd", {"(1 ; 3)", "(3 ; 1)", "(1 ; 1,1,1)"}, {{3, 1}, {3, 2}}},
        {4, "even", {"(4 ;)", "(2 ; 1,1)", "(1 ; 1,2)"}, {{2, 1}, {3, 1}, {3, 2}}},
        {4, "odd",
         {"(1 ; 4)", "(2 ; 2)", "(4 ; 1)", "(1 ; 1,2,1)", "(1 ; 2,1,1)"},
         {{2, 1}, {4, 1}, {4, 3}, {5, 2}, {5, 3}}},
        {5, "even",
         {"(5 ;)", "(1 ; 2,2)", "(2 ; 2,1)", "(1 ; 1,1,1,1)"},
         {{3, 1}, {3, 2}, {5, 2}, {5, 3}, {7, 1}, {7, 6}}},
        {5, "odd",
         {"(1 ; 5)", "(5 ; 1)", "(1 ; 1,3,1)", "(1 ; 3,1,1)", "(1 ; 2,2,1)"},
         {{5, 1}, {5, 4}, {7, 2}, {7, 5}, {7, 3}, {7, 4}}},
        {6, "even",
         {"(6 ;)", "(3 ; 1,1)", "(1 ; 1,3)", "(2 ; 3,1)", "(1 ; 3,2)", "(1 ; 2,1,1,1)", "(1 ; 1,1,2,1)"},
         {{2, 1}, {4, 1}, {4, 3}, {7, 2}, {7, 5}, {7, 3}, {7, 4}, {8, 3}, {8, 5}}},
        {6, "odd",
         {"(1 ; 6)", "(2 ; 3)", "(3 ; 2)", "(6 ; 1)", "(1 ; 1,4,1)", "(1 ; 4,1,1)", "(2 ; 1,1,1)", "(1 ; 1,1,2)",
          "(1 ; 2,3,1)", "(1 ; 3,2,1)"},
         {{2, 1}, {3, 1}, {3, 2}, {5, 2}, {5, 3}, {6, 1}, {6, 5}, {9, 2}, {9, 7}, {9, 4}, {9, 5}, {10, 3}, {10, 7}}},
    };
    return rows;
}

}  // namespace golden
