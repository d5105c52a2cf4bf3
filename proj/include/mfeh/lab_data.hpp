#pragma once

// Laboratory reference dataset for the two built coils: measured power
// outputs over the current range, and the published model-curve
// coefficients (P = k * I^2), at both electrification frequencies and four
// coil-to-conductor distances. Used as fixtures for fitting and for
// model-vs-measurement reporting.

#include <string>
#include <vector>

namespace mfeh::lab {

constexpr double freq_16_7 = 50.0 / 3.0; ///< 16 2/3 Hz
constexpr double freq_50 = 50.0;

struct MeasuredPoint {
    const char* coil; ///< "coil-a" or "coil-b"
    double f_hz;
    double r_m;
    double i_a;
    double p_uw; ///< measured matched-load power [uW]
};

struct ModelCoefficient {
    const char* coil;
    double f_hz;
    double r_m;
    double k_uw_per_a2; ///< published model-curve coefficient [uW/A^2]
};

/// Published model-curve coefficients: 2 coils x 2 frequencies x 4 distances.
inline const std::vector<ModelCoefficient>& model_coefficients() {
    static const std::vector<ModelCoefficient> table = {
        {"coil-a", freq_16_7, 0.25, 0.10338819156701182},
        {"coil-a", freq_16_7, 0.50, 0.017314895626866153},
        {"coil-a", freq_16_7, 0.75, 0.00488928419540072},
        {"coil-a", freq_16_7, 1.00, 0.0017819709626767121},
        {"coil-b", freq_16_7, 0.25, 0.0663763526819306},
        {"coil-b", freq_16_7, 0.50, 0.011116352857712564},
        {"coil-b", freq_16_7, 0.75, 0.0031389740665476204},
        {"coil-b", freq_16_7, 1.00, 0.001144044898115123},
        {"coil-a", freq_50, 0.25, 0.9301216382429436},
        {"coil-a", freq_50, 0.50, 0.1557717457126405},
        {"coil-a", freq_50, 0.75, 0.04398596161452219},
        {"coil-a", freq_50, 1.00, 0.016031325492640327},
        {"coil-b", freq_50, 0.25, 0.5971482909350695},
        {"coil-b", freq_50, 0.50, 0.10000716885158564},
        {"coil-b", freq_50, 0.75, 0.028239469681477194},
        {"coil-b", freq_50, 1.00, 0.010292286756641976},
    };
    return table;
}

/// Measured lab points (tagged as measured data, not model output).
inline const std::vector<MeasuredPoint>& measured_points() {
    static const std::vector<MeasuredPoint> table = {
        // 16 2/3 Hz, 0.25 m
        {"coil-a", freq_16_7, 0.25, 25, 58.7},   {"coil-a", freq_16_7, 0.25, 50, 237.2},
        {"coil-a", freq_16_7, 0.25, 75, 533.8},  {"coil-a", freq_16_7, 0.25, 100, 974.9},
        {"coil-a", freq_16_7, 0.25, 125, 1512.2},{"coil-a", freq_16_7, 0.25, 150, 2234.9},
        {"coil-a", freq_16_7, 0.25, 175, 3098.3},{"coil-a", freq_16_7, 0.25, 200, 4151.3},
        {"coil-b", freq_16_7, 0.25, 25, 48.1},   {"coil-b", freq_16_7, 0.25, 50, 180.9},
        {"coil-b", freq_16_7, 0.25, 75, 402.8},  {"coil-b", freq_16_7, 0.25, 100, 743.3},
        {"coil-b", freq_16_7, 0.25, 125, 1162.3},{"coil-b", freq_16_7, 0.25, 150, 1743.5},
        {"coil-b", freq_16_7, 0.25, 175, 2406.2},{"coil-b", freq_16_7, 0.25, 200, 3228.5},
        // 16 2/3 Hz, 0.50 m
        {"coil-a", freq_16_7, 0.50, 25, 11.2},   {"coil-a", freq_16_7, 0.50, 50, 41.5},
        {"coil-a", freq_16_7, 0.50, 75, 91.6},   {"coil-a", freq_16_7, 0.50, 100, 163.1},
        {"coil-a", freq_16_7, 0.50, 125, 250.3}, {"coil-a", freq_16_7, 0.50, 150, 373.6},
        {"coil-a", freq_16_7, 0.50, 175, 509.4}, {"coil-a", freq_16_7, 0.50, 200, 680.0},
        {"coil-b", freq_16_7, 0.50, 25, 9.8},    {"coil-b", freq_16_7, 0.50, 50, 28.8},
        {"coil-b", freq_16_7, 0.50, 75, 62.0},   {"coil-b", freq_16_7, 0.50, 100, 108.7},
        {"coil-b", freq_16_7, 0.50, 125, 168.5}, {"coil-b", freq_16_7, 0.50, 150, 244.6},
        {"coil-b", freq_16_7, 0.50, 175, 334.8}, {"coil-b", freq_16_7, 0.50, 200, 450.1},
        // 16 2/3 Hz, 0.75 m
        {"coil-a", freq_16_7, 0.75, 25, 4.3},    {"coil-a", freq_16_7, 0.75, 50, 12.3},
        {"coil-a", freq_16_7, 0.75, 75, 25.3},   {"coil-a", freq_16_7, 0.75, 100, 44.5},
        {"coil-a", freq_16_7, 0.75, 125, 67.8},  {"coil-a", freq_16_7, 0.75, 150, 99.8},
        {"coil-a", freq_16_7, 0.75, 175, 134.3}, {"coil-a", freq_16_7, 0.75, 200, 179.1},
        {"coil-b", freq_16_7, 0.75, 25, 5.0},    {"coil-b", freq_16_7, 0.75, 50, 9.3},
        {"coil-b", freq_16_7, 0.75, 75, 18.0},   {"coil-b", freq_16_7, 0.75, 100, 31.1},
        {"coil-b", freq_16_7, 0.75, 125, 45.9},  {"coil-b", freq_16_7, 0.75, 150, 64.4},
        {"coil-b", freq_16_7, 0.75, 175, 89.0},  {"coil-b", freq_16_7, 0.75, 200, 115.3},
        // 16 2/3 Hz, 1.00 m
        {"coil-a", freq_16_7, 1.00, 25, 2.9},    {"coil-a", freq_16_7, 1.00, 50, 6.1},
        {"coil-a", freq_16_7, 1.00, 75, 10.5},   {"coil-a", freq_16_7, 1.00, 100, 17.3},
        {"coil-a", freq_16_7, 1.00, 125, 25.3},  {"coil-a", freq_16_7, 1.00, 150, 36.3},
        {"coil-a", freq_16_7, 1.00, 175, 47.6},  {"coil-a", freq_16_7, 1.00, 200, 64.7},
        {"coil-b", freq_16_7, 1.00, 25, 4.0},    {"coil-b", freq_16_7, 1.00, 50, 5.6},
        {"coil-b", freq_16_7, 1.00, 75, 8.9},    {"coil-b", freq_16_7, 1.00, 100, 13.9},
        {"coil-b", freq_16_7, 1.00, 125, 18.7},  {"coil-b", freq_16_7, 1.00, 150, 25.4},
        {"coil-b", freq_16_7, 1.00, 175, 32.9},  {"coil-b", freq_16_7, 1.00, 200, 43.1},
        // 50 Hz, 0.25 m
        {"coil-a", freq_50, 0.25, 25, 569.6},    {"coil-a", freq_50, 0.25, 50, 2271.1},
        {"coil-a", freq_50, 0.25, 75, 5137.2},   {"coil-a", freq_50, 0.25, 100, 9157.1},
        {"coil-a", freq_50, 0.25, 125, 14330.8}, {"coil-a", freq_50, 0.25, 150, 21099.0},
        {"coil-a", freq_50, 0.25, 175, 28653.5}, {"coil-a", freq_50, 0.25, 200, 40520.9},
        {"coil-b", freq_50, 0.25, 25, 384.2},    {"coil-b", freq_50, 0.25, 50, 1590.3},
        {"coil-b", freq_50, 0.25, 75, 3593.8},   {"coil-b", freq_50, 0.25, 100, 6698.1},
        {"coil-b", freq_50, 0.25, 125, 10653.3}, {"coil-b", freq_50, 0.25, 150, 15782.9},
        {"coil-b", freq_50, 0.25, 175, 21917.4}, {"coil-b", freq_50, 0.25, 200, 29592.4},
        // 50 Hz, 0.50 m
        {"coil-a", freq_50, 0.50, 25, 101.3},    {"coil-a", freq_50, 0.50, 50, 400.6},
        {"coil-a", freq_50, 0.50, 75, 918.6},    {"coil-a", freq_50, 0.50, 100, 1633.1},
        {"coil-a", freq_50, 0.50, 125, 2571.1},  {"coil-a", freq_50, 0.50, 150, 3767.6},
        {"coil-a", freq_50, 0.50, 175, 5192.0},  {"coil-a", freq_50, 0.50, 200, 6907.6},
        {"coil-b", freq_50, 0.50, 25, 61.1},     {"coil-b", freq_50, 0.50, 50, 246.2},
        {"coil-b", freq_50, 0.50, 75, 562.6},    {"coil-b", freq_50, 0.50, 100, 1034.5},
        {"coil-b", freq_50, 0.50, 125, 1615.3},  {"coil-b", freq_50, 0.50, 150, 2390.9},
        {"coil-b", freq_50, 0.50, 175, 3228.5},  {"coil-b", freq_50, 0.50, 200, 4314.1},
        // 50 Hz, 0.75 m
        {"coil-a", freq_50, 0.75, 25, 29.3},     {"coil-a", freq_50, 0.75, 50, 114.0},
        {"coil-a", freq_50, 0.75, 75, 256.4},    {"coil-a", freq_50, 0.75, 100, 457.4},
        {"coil-a", freq_50, 0.75, 125, 712.2},   {"coil-a", freq_50, 0.75, 150, 1040.3},
        {"coil-a", freq_50, 0.75, 175, 1427.4},  {"coil-a", freq_50, 0.75, 200, 1889.0},
        {"coil-b", freq_50, 0.75, 25, 19.3},     {"coil-b", freq_50, 0.75, 50, 67.0},
        {"coil-b", freq_50, 0.75, 75, 155.2},    {"coil-b", freq_50, 0.75, 100, 269.6},
        {"coil-b", freq_50, 0.75, 125, 434.8},   {"coil-b", freq_50, 0.75, 150, 644.5},
        {"coil-b", freq_50, 0.75, 175, 879.8},   {"coil-b", freq_50, 0.75, 200, 1148.1},
        // 50 Hz, 1.00 m
        {"coil-a", freq_50, 1.00, 25, 11.9},     {"coil-a", freq_50, 1.00, 50, 42.0},
        {"coil-a", freq_50, 1.00, 75, 87.2},     {"coil-a", freq_50, 1.00, 100, 161.2},
        {"coil-a", freq_50, 1.00, 125, 252.7},   {"coil-a", freq_50, 1.00, 150, 369.2},
        {"coil-a", freq_50, 1.00, 175, 502.5},   {"coil-a", freq_50, 1.00, 200, 672.1},
        {"coil-b", freq_50, 1.00, 25, 11.4},     {"coil-b", freq_50, 1.00, 50, 28.8},
        {"coil-b", freq_50, 1.00, 75, 58.7},     {"coil-b", freq_50, 1.00, 100, 100.2},
        {"coil-b", freq_50, 1.00, 125, 155.2},   {"coil-b", freq_50, 1.00, 150, 220.7},
        {"coil-b", freq_50, 1.00, 175, 305.0},   {"coil-b", freq_50, 1.00, 200, 411.2},
    };
    return table;
}

} // namespace mfeh::lab
