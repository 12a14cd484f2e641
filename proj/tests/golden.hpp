#pragma once

// The four published triangles, typed in by hand for n = 1..6.

#include <vector>

namespace golden {

struct Triangle {
    unsigned r, s;
    std::vector<std::vector<long>> rows;  // k ascending from s
    std::vector<long> sums;
};

inline const std::vector<Triangle>& table() {
    static const std::vector<Triangle> t = {
        {1, 1, {{1}, {1, 1}, {1, 3, 1}, {1, 7, 6, 1}, {1, 15, 25, 10, 1}, {1, 31, 90, 65, 15, 1}}, {1, 2, 5, 15, 52, 203}},
        {2, 1,
         {{1}, {2, 1}, {6, 6, 1}, {24, 36, 12, 1}, {120, 240, 120, 20, 1}, {720, 1800, 1200, 300, 30, 1}},
         {1, 3, 13, 73, 501, 4051}},
        {2, 2,
         {{1},
          {2, 4, 1},
          {4, 32, 38, 12, 1},
          {8, 208, 652, 576, 188, 24, 1},
          {16, 1280, 9080, 16944, 12052, 3840, 580, 40, 1},
          {32, 7744, 116656, 412800, 540080, 322848, 98292, 16000, 1390, 60, 1}},
         {1, 7, 87, 1657, 43833, 1515903}},
        {3, 2,
         {{1},
          {6, 6, 1},
          {72, 168, 96, 18, 1},
          {1440, 5760, 6120, 2520, 456, 36, 1},
          {43200, 259200, 424800, 285120, 92520, 15600, 1380, 60, 1},
          {1814400, 15120000, 34776000, 33566400, 16304400, 4379760, 682200, 62400, 3270, 90, 1}},
         {1, 13, 355, 16333, 1121881, 106708921}},
    };
    return t;
}

}  // namespace golden
