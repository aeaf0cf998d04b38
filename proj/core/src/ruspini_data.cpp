#include "fcmlab/datagen.hpp"

#include <array>
#include <vector>

namespace fcmlab {

namespace {

// Classic Ruspini benchmark: 75 integer-coordinate points in four
// well-separated planar groups of sizes 20, 23, 17 and 15.
struct RuspiniPoint {
    double x;
    double y;
    int group;
};

constexpr std::array<RuspiniPoint, 75> kRuspini = {{
    // group 1: lower left
    {4, 53, 1},   {5, 63, 1},   {10, 59, 1},  {9, 77, 1},   {13, 49, 1},
    {13, 69, 1},  {12, 88, 1},  {15, 75, 1},  {18, 61, 1},  {19, 65, 1},
    {22, 74, 1},  {27, 72, 1},  {28, 76, 1},  {24, 58, 1},  {27, 55, 1},
    {28, 60, 1},  {30, 52, 1},  {31, 60, 1},  {32, 61, 1},  {36, 72, 1},
    // group 2: upper middle
    {28, 147, 2}, {32, 149, 2}, {35, 153, 2}, {33, 154, 2}, {38, 151, 2},
    {41, 150, 2}, {38, 145, 2}, {38, 143, 2}, {32, 143, 2}, {34, 141, 2},
    {44, 156, 2}, {44, 149, 2}, {44, 143, 2}, {46, 142, 2}, {47, 149, 2},
    {49, 152, 2}, {50, 142, 2}, {53, 144, 2}, {52, 152, 2}, {55, 155, 2},
    {54, 124, 2}, {60, 136, 2}, {63, 139, 2},
    // group 3: upper right
    {86, 132, 3},  {85, 115, 3},  {85, 96, 3},   {78, 94, 3},   {74, 96, 3},
    {97, 122, 3},  {98, 116, 3},  {98, 124, 3},  {99, 119, 3},  {101, 115, 3},
    {104, 111, 3}, {106, 122, 3}, {107, 119, 3}, {110, 118, 3}, {112, 114, 3},
    {112, 122, 3}, {117, 118, 3},
    // group 4: bottom
    {61, 25, 4}, {64, 19, 4}, {66, 9, 4},  {68, 4, 4},  {70, 13, 4},
    {75, 20, 4}, {78, 16, 4}, {83, 24, 4}, {55, 18, 4}, {76, 27, 4},
    {77, 31, 4}, {58, 29, 4}, {65, 22, 4}, {67, 15, 4}, {71, 19, 4},
}};

} // namespace

Dataset ruspini_fixture() {
    std::vector<double> values;
    values.reserve(kRuspini.size() * 2);
    std::vector<int> labels;
    labels.reserve(kRuspini.size());
    for (const auto& p : kRuspini) {
        values.push_back(p.x);
        values.push_back(p.y);
        labels.push_back(p.group);
    }
    return Dataset(std::move(values), 2, std::move(labels), "ruspini");
}

} // namespace fcmlab
