#pragma once

#include <array>
#include <vector>

namespace kxor::golden {

// Published large-degree optima for both one-local algorithms, truncated to
// five decimals. Table-producing commands validate against these rows.
struct LargeDegreeRow {
    int k;
    double c_qaoa;
    double t;      // gamma * sqrt(D)
    double beta;
    double c_mu;
    double alpha;
};

inline constexpr std::array<LargeDegreeRow, 18> kLargeDegree = {{
    {2, 0.30326, 1.00001, 0.39269, 0.33649, -0.43845},
    {3, 0.33146, 1.05351, 0.29000, 0.34754, -0.56611},
    {4, 0.35594, 1.09779, 0.23644, 0.35948, -0.64611},
    {5, 0.37671, 1.13477, 0.20254, 0.37008, -0.70408},
    {6, 0.39459, 1.16637, 0.17879, 0.37934, -0.74931},
    {7, 0.41025, 1.19393, 0.16105, 0.38748, -0.78625},
    {8, 0.42415, 1.21833, 0.14721, 0.39471, -0.81739},
    {9, 0.43665, 1.24021, 0.13605, 0.40120, -0.84426},
    {10, 0.44799, 1.26005, 0.12683, 0.40707, -0.86783},
    {11, 0.45837, 1.27817, 0.11906, 0.41243, -0.88881},
    {12, 0.46793, 1.29485, 0.11241, 0.41736, -0.90769},
    {13, 0.47679, 1.31031, 0.10664, 0.42192, -0.92483},
    {14, 0.48505, 1.32469, 0.10157, 0.42615, -0.94052},
    {15, 0.49279, 1.33815, 0.09708, 0.43010, -0.95497},
    {16, 0.50005, 1.35081, 0.09307, 0.43381, -0.96836},
    {17, 0.50690, 1.36273, 0.08946, 0.43729, -0.98083},
    {18, 0.51338, 1.37399, 0.08619, 0.44058, -0.99249},
    {19, 0.51953, 1.38469, 0.08322, 0.44370, -1.00344},
}};

// Ground-state energy densities of the pure k-spin model (truncated), with
// the independently known values where they exist.
struct ParisiRow {
    int k;
    double computed;  // published numerical value
    double known;     // 0 when no independent value exists
};

inline constexpr std::array<ParisiRow, 14> kParisiValues = {{
    {2, 1.0799, 1.07928},
    {3, 1.1504, 1.150},
    {4, 1.1674, 0.0},
    {5, 1.1732, 0.0},
    {6, 1.1756, 0.0},
    {7, 1.1765, 0.0},
    {8, 1.1770, 0.0},
    {9, 1.1772, 0.0},
    {10, 1.1773, 0.0},
    {11, 1.1773, 0.0},
    {12, 1.1773, 0.0},
    {13, 1.1774, 0.0},
    {14, 1.1774, 0.0},
    {15, 1.1774, 0.0},
}};

// Max kSAT Parisi values (conditional regression targets; the mixed-model
// coefficients are supplied by the caller, not shipped here).
struct KsatRow {
    int k;
    double b;
    double c;
};

inline constexpr std::array<KsatRow, 7> kKsatValues = {{
    {3, 2.2176, 0.277},
    {4, 3.7457, 0.234},
    {5, 5.8483, 0.182},
    {6, 8.7320, 0.136},
    {7, 13.239, 0.103},
    {8, 18.362, 0.071},
    {9, 26.246, 0.051},
}};

// Degrees D < 300 where the depth-1 QAOA beats the optimized threshold
// algorithm at k = 3.
inline const std::vector<int> kQaoaWinsK3 = {3, 4, 6, 8, 11, 13, 18, 20, 27};

}  // namespace kxor::golden
