#pragma once

// Published reference values for the 21-point mobility dataset (lambda = 3)
// and the simulation grids. Columns: eb_sel, eb_kl, eb_el, emse_sel, emse_kl, emse_el.

#include <array>
#include <cstddef>

namespace reference {

struct Row {
    double c;
    std::array<double, 6> values;
};

inline constexpr std::array<Row, 5> kMobilityTable{{
    {0.25, {2.56133, 2.50106, 2.44220, 0.30516, 0.30879, 0.31935}},
    {0.50, {2.52429, 2.46489, 2.40688, 0.29646, 0.29999, 0.31025}},
    {0.75, {2.48864, 2.43007, 2.37289, 0.28824, 0.29167, 0.30165}},
    {1.00, {2.45429, 2.39653, 2.34013, 0.28047, 0.28381, 0.29351}},
    {1.25, {2.42116, 2.36418, 2.30855, 0.27310, 0.27635, 0.28581}},
}};

inline constexpr double kMobilityMle = 2.539392;
inline constexpr double kMobilityLambda = 3.0;

struct SimRow {
    double c;
    std::size_t n;
    std::array<double, 6> values;
};

// alpha = 2.5, lambda = 1; rows c outer, n inner.
inline constexpr std::array<SimRow, 15> kSimAlpha25Lambda1{{
    {0.5, 20, {2.61178, 2.54728, 2.48438, 0.35049, 0.35488, 0.36759}},
    {0.5, 40, {2.55534, 2.52359, 2.49224, 0.16533, 0.16637, 0.16942}},
    {0.5, 60, {2.53703, 2.51598, 2.49510, 0.10814, 0.10859, 0.10993}},
    {0.5, 80, {2.53287, 2.51708, 2.50140, 0.08071, 0.08096, 0.08171}},
    {0.5, 100, {2.52099, 2.50841, 2.49590, 0.06389, 0.06405, 0.06453}},
    {1.0, 20, {2.51231, 2.45027, 2.38976, 0.32314, 0.32718, 0.33890}},
    {1.0, 40, {2.52068, 2.48937, 2.45844, 0.16087, 0.16188, 0.16484}},
    {1.0, 60, {2.51319, 2.49233, 2.47165, 0.10616, 0.10660, 0.10791}},
    {1.0, 80, {2.51219, 2.49654, 2.48098, 0.07936, 0.07961, 0.08035}},
    {1.0, 100, {2.50503, 2.49253, 2.48010, 0.06307, 0.06322, 0.06369}},
    {1.5, 20, {2.44681, 2.38638, 2.32745, 0.30578, 0.30960, 0.32070}},
    {1.5, 40, {2.47814, 2.44735, 2.41695, 0.15545, 0.15642, 0.15929}},
    {1.5, 60, {2.47948, 2.45891, 2.43850, 0.10331, 0.10374, 0.10502}},
    {1.5, 80, {2.48935, 2.47384, 2.45843, 0.07792, 0.07816, 0.07889}},
    {1.5, 100, {2.49199, 2.47957, 2.46720, 0.06242, 0.06257, 0.06304}},
}};

struct SpotCheck {
    const char* label;
    double alpha;
    double lambda;
    SimRow row;
};

// One cell from each of the remaining five tables. The last table's caption
// repeats lambda = 2; it is the lambda = 3 case.
inline constexpr std::array<SpotCheck, 5> kSpotChecks{{
    {"alpha=2.5 lambda=2", 2.5, 2.0, {1.5, 40, {2.47615, 2.44539, 2.41501, 0.15504, 0.15601, 0.15886}}},
    {"alpha=2.5 lambda=3", 2.5, 3.0, {0.5, 20, {2.6076, 2.54321, 2.4804, 0.3484, 0.35275, 0.36539}}},
    {"alpha=5 lambda=1", 5.0, 1.0, {0.5, 20, {5.03351, 4.90920, 4.78797, 1.29946, 1.31571, 1.36285}}},
    {"alpha=5 lambda=2", 5.0, 2.0, {0.5, 20, {5.05181, 4.92705, 4.80538, 1.30710, 1.32344, 1.37086}}},
    {"alpha=5 lambda=3", 5.0, 3.0, {0.5, 20, {5.04171, 4.91720, 4.79577, 1.30234, 1.31863, 1.36587}}},
}};

} // namespace reference
