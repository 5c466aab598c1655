#include <array>

#include "ginipca/io.hpp"

namespace ginipca {

namespace {

struct CarRow {
    const char* name;
    std::array<double, 6> values;
};

constexpr std::array<CarRow, 24> kCars{{
    {"Citroën C2 1.1 Base", {1124, 61, 158, 932, 1659, 3666}},
    {"Smart Fortwo Coupé", {698, 52, 135, 730, 1515, 2500}},
    {"Mini 1.6 170", {1598, 170, 218, 1215, 1690, 3625}},
    {"Nissan Micra 1.2 65", {1240, 65, 154, 965, 1660, 3715}},
    {"Renault Clio 3.0 V6", {2946, 255, 245, 1400, 1810, 3812}},
    {"Audi A3 1.9 TDI", {1896, 105, 187, 1295, 1765, 4203}},
    {"Peugeot 307 1.4 HDI 70", {1398, 70, 160, 1179, 1746, 4202}},
    {"Peugeot 407 3.0 V6 BVA", {2946, 211, 229, 1640, 1811, 4676}},
    {"Mercedes Classe C 270 CDI", {2685, 170, 230, 1600, 1728, 4528}},
    {"BMW 530d", {2993, 218, 245, 1595, 1846, 4841}},
    {"Jaguar S-Type 2.7 V6 Bi-Turbo", {2720, 207, 230, 1722, 1818, 4905}},
    {"BMW 745i", {4398, 333, 250, 1870, 1902, 5029}},
    {"Mercedes Classe S 400 CDI", {3966, 260, 250, 1915, 2092, 5038}},
    {"Citroën C3 Pluriel 1.6i", {1587, 110, 185, 1177, 1700, 3934}},
    {"BMW Z4 2.5i", {2494, 192, 235, 1260, 1781, 4091}},
    {"Audi TT 1.8T 180", {1781, 180, 228, 1280, 1764, 4041}},
    {"Aston Martin Vanquish", {5935, 460, 306, 1835, 1923, 4665}},
    {"Bentley Continental GT", {5998, 560, 318, 2385, 1918, 4804}},
    {"Ferrari Enzo", {5998, 660, 350, 1365, 2650, 4700}},
    {"Renault Scenic 1.9 dCi 120", {1870, 120, 188, 1430, 1805, 4259}},
    {"Volkswagen Touran 1.9 TDI 105", {1896, 105, 180, 1498, 1794, 4391}},
    {"Land Rover Defender Td5", {2495, 122, 135, 1695, 1790, 3883}},
    {"Land Rover Discovery Td5", {2495, 138, 157, 2175, 2190, 4705}},
    {"Nissan X-Trail 2.2 dCi", {2184, 136, 180, 1520, 1765, 4455}},
}};

}  // namespace

DataMatrix cars_dataset() {
    DataMatrix out;
    out.column_names = {"capacity", "power", "speed", "weight", "width", "length"};
    out.values = Matrix(kCars.size(), 6);
    for (std::size_t i = 0; i < kCars.size(); ++i) {
        out.row_labels.emplace_back(kCars[i].name);
        for (std::size_t c = 0; c < 6; ++c) out.values(i, c) = kCars[i].values[c];
    }
    return out;
}

}  // namespace ginipca
