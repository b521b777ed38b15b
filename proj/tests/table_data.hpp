// Fixture data for the classification tables: defining exponents (as
// strings), group orders, center orders and mu columns.
#ifndef RIGID4_TESTS_TABLE_DATA_HPP
#define RIGID4_TESTS_TABLE_DATA_HPP

#include <array>
#include <string>
#include <vector>

namespace tabledata {

struct SpecialRow {  // beta = (0, 1/2)
  const char* alpha1;
  const char* gamma;  // comma separated
  long order;
  long center;
  bool imprimitive;
};

// alpha = (1/3, 2/3)
inline const std::vector<SpecialRow> table1 = {
    {"1/3", "1/8,3/8,5/8,7/8", 48, 2, true},
    {"1/3", "1/5,2/5,3/5,4/5", 60, 1, false},
    {"1/3", "1/10,3/10,7/10,9/10", 120, 2, false},
    {"1/3", "1/12,5/12,7/12,11/12", 144, 2, true},
    {"1/3", "1/20,9/20,13/20,17/20", 240, 4, false},
    {"1/3", "2/9,1/3,5/9,8/9", 324, 1, true},
    {"1/3", "1/24,7/24,17/24,23/24", 576, 2, false},
    {"1/3", "1/28,9/28,3/4,25/28", 672, 4, false},
    {"1/3", "1/20,9/20,11/20,19/20", 720, 2, true},
    {"1/3", "1/15,4/15,11/15,14/15", 1440, 2, false},
    {"1/3", "1/30,11/30,19/30,29/30", 1440, 2, false},
    {"1/3", "1/40,9/40,31/40,39/40", 2880, 2, false},
};

// alpha = (1/4, 3/4)
inline const std::vector<SpecialRow> table2 = {
    {"1/4", "1/12,5/12,7/12,11/12", 192, 2, true},
    {"1/4", "1/20,9/20,13/20,17/20", 640, 4, false},
    {"1/4", "1/36,13/36,25/36,11/12", 103680, 4, false},
};

// alpha = (1/5, 4/5)
inline const std::vector<SpecialRow> table3 = {
    {"1/5", "1/12,5/12,7/12,11/12", 1200, 2, true},
    {"1/5", "2/15,7/15,8/15,13/15", 7200, 2, false},
    {"1/5", "1/20,9/20,11/20,19/20", 1200, 2, true},
    {"1/5", "1/30,11/30,19/30,29/30", 7200, 2, false},
};

struct GeneralRow {  // beta = (0, b)
  const char* b;
  const char* alpha;  // "a1,a2"
  const char* gamma;
  long order;
  long center;
  bool imprimitive;
};

inline const std::vector<GeneralRow> table4 = {
    {"1/2", "1/2,1/3", "1/8,11/24,5/8,23/24", 4608, 4, true},
    {"1/2", "1/2,1/3", "5/48,23/48,29/48,47/48", 41472, 6, true},
    {"1/2", "1/2,1/3", "11/120,59/120,71/120,119/120", 1036800, 12, true},
    {"1/2", "1/2,1/4", "7/48,23/48,31/48,47/48", 6144, 8, true},
    {"1/2", "1/2,1/5", "7/40,19/40,27/40,39/40", 2880000, 20, true},
    {"1/2", "1/2,1/5", "19/120,59/120,79/120,119/120", 2880000, 20, true},
    {"1/2", "1/2,1/6", "5/36,17/36,29/36,11/12", 311040, 12, false},
    {"1/2", "1/2,1/6", "11/60,23/60,47/60,59/60", 311040, 12, false},
    {"1/2", "1/3,1/4", "7/24,5/12,19/24,11/12", 165888, 12, true},
    {"1/2", "1/3,1/4", "11/48,23/48,35/48,47/48", 165888, 12, true},
    {"1/2", "1/3,1/5", "4/15,7/15,23/30,29/30", 6480000, 30, true},
    {"1/2", "1/3,1/5", "17/60,9/20,47/60,19/20", 6480000, 30, true},
    {"1/2", "1/3,1/5", "19/60,5/12,49/60,11/12", 6480000, 30, true},
    {"1/2", "1/3,1/5", "29/120,59/120,89/120,119/120", 6480000, 30, true},
    {"1/2", "1/5,2/5", "4/15,13/30,23/30,14/15", 6000, 10, true},
    {"1/2", "1/5,2/5", "9/40,19/40,29/40,39/40", 6000, 10, true},
    {"1/3", "1/2,5/6", "1/18,7/18,13/18,5/6", 155520, 6, false},
    {"1/3", "1/2,1/6", "5/18,11/18,5/6,17/18", 155520, 6, false},
    {"1/3", "1/2,1/6", "11/30,17/30,23/30,29/30", 155520, 6, false},
    {"1/3", "1/3,2/3", "1/12,11/24,5/6,23/24", 69120, 12, false},
    {"1/3", "1/3,2/3", "2/15,8/15,11/15,14/15", 2160, 6, false},
    {"1/3", "1/3,2/3", "5/24,11/24,17/24,23/24", 2160, 6, false},
    {"1/3", "1/3,2/3", "5/42,17/42,5/6,41/42", 15120, 6, false},
    {"1/3", "1/3,2/3", "11/60,23/60,47/60,59/60", 69120, 12, false},
};

struct RationalRow {
  const char* alpha;  // "a1,a2"
  const char* beta;   // "b1,b2"
  const char* gamma;
  long mu;
};

// signature (2,2) at the identity embedding
inline const std::vector<RationalRow> table5 = {
    {"1/3,2/3", "0,1/2", "1/4,1/3,2/3,3/4", -2},
    {"1/3,2/3", "0,1/2", "1/6,1/4,3/4,5/6", -2},
    {"1/3,2/3", "1/3,2/3", "1/6,1/4,3/4,5/6", -2},
    {"1/3,2/3", "1/3,2/3", "1/10,3/10,7/10,9/10", -1},
    {"1/3,2/3", "1/6,5/6", "1/4,1/3,2/3,3/4", -2},
    {"1/3,2/3", "1/6,5/6", "1/5,2/5,3/5,4/5", -1},
    {"1/4,3/4", "0,1/2", "1/4,1/3,2/3,3/4", -3},
    {"1/4,3/4", "0,1/2", "1/6,1/3,2/3,5/6", -1},
    {"1/4,3/4", "0,1/2", "1/6,1/4,3/4,5/6", -3},
    {"1/4,3/4", "0,1/2", "1/5,2/5,3/5,4/5", -1},
    {"1/4,3/4", "0,1/2", "1/10,3/10,7/10,9/10", -1},
    {"1/4,3/4", "1/3,2/3", "1/6,1/4,3/4,5/6", -3},
    {"1/4,3/4", "1/3,2/3", "1/10,3/10,7/10,9/10", -1},
    {"1/4,3/4", "1/3,2/3", "1/12,5/12,7/12,11/12", 1},
    {"1/4,3/4", "1/4,3/4", "1/12,5/12,7/12,11/12", 1},
    {"1/4,3/4", "1/6,5/6", "1/4,1/3,2/3,3/4", -3},
    {"1/4,3/4", "1/6,5/6", "1/5,2/5,3/5,4/5", -1},
    {"1/4,3/4", "1/6,5/6", "1/12,5/12,7/12,11/12", 1},
    {"1/6,5/6", "0,1/2", "1/4,1/3,2/3,3/4", -2},
    {"1/6,5/6", "0,1/2", "1/6,1/3,2/3,5/6", -2},
    {"1/6,5/6", "0,1/2", "1/6,1/4,3/4,5/6", -2},
    {"1/6,5/6", "0,1/2", "1/5,2/5,3/5,4/5", -1},
    {"1/6,5/6", "0,1/2", "1/8,3/8,5/8,7/8", -1},
    {"1/6,5/6", "0,1/2", "1/10,3/10,7/10,9/10", -1},
    {"1/6,5/6", "1/3,2/3", "1/6,1/4,3/4,5/6", -2},
    {"1/6,5/6", "1/3,2/3", "1/5,2/5,3/5,4/5", 1},
    {"1/6,5/6", "1/3,2/3", "1/8,3/8,5/8,7/8", 1},
    {"1/6,5/6", "1/3,2/3", "1/10,3/10,7/10,9/10", 1},
    {"1/6,5/6", "1/3,2/3", "1/12,5/12,7/12,11/12", 2},
    {"1/6,5/6", "1/4,3/4", "1/5,2/5,3/5,4/5", 1},
    {"1/6,5/6", "1/4,3/4", "1/8,3/8,5/8,7/8", 1},
    {"1/6,5/6", "1/4,3/4", "1/10,3/10,7/10,9/10", 1},
    {"1/6,5/6", "1/4,3/4", "1/12,5/12,7/12,11/12", 2},
    {"1/6,5/6", "1/6,5/6", "1/4,1/3,2/3,3/4", -2},
    {"1/6,5/6", "1/6,5/6", "1/5,2/5,3/5,4/5", 1},
    {"1/6,5/6", "1/6,5/6", "1/8,3/8,5/8,7/8", 1},
    {"1/6,5/6", "1/6,5/6", "1/10,3/10,7/10,9/10", 1},
    {"1/6,5/6", "1/6,5/6", "1/12,5/12,7/12,11/12", 2},
};

// signature (4,0) at the identity embedding
inline const std::vector<RationalRow> table6 = {
    {"1/3,2/3", "0,1/2", "1/5,2/5,3/5,4/5", 1},
    {"1/3,2/3", "0,1/2", "1/8,3/8,5/8,7/8", 1},
    {"1/3,2/3", "0,1/2", "1/10,3/10,7/10,9/10", 1},
    {"1/3,2/3", "0,1/2", "1/12,5/12,7/12,11/12", 2},
    {"1/3,2/3", "1/3,2/3", "1/5,2/5,3/5,4/5", -1},
    {"1/3,2/3", "1/3,2/3", "1/8,3/8,5/8,7/8", -1},
    {"1/3,2/3", "1/4,3/4", "1/6,1/3,2/3,5/6", -2},
    {"1/3,2/3", "1/4,3/4", "1/5,2/5,3/5,4/5", -1},
    {"1/3,2/3", "1/4,3/4", "1/8,3/8,5/8,7/8", -1},
    {"1/3,2/3", "1/4,3/4", "1/10,3/10,7/10,9/10", -1},
    {"1/3,2/3", "1/6,5/6", "1/8,3/8,5/8,7/8", -1},
    {"1/3,2/3", "1/6,5/6", "1/10,3/10,7/10,9/10", -1},
    {"1/4,3/4", "0,1/2", "1/12,5/12,7/12,11/12", 1},
    {"1/4,3/4", "1/3,2/3", "1/5,2/5,3/5,4/5", -1},
    {"1/4,3/4", "1/4,3/4", "1/6,1/3,2/3,5/6", -1},
    {"1/4,3/4", "1/4,3/4", "1/5,2/5,3/5,4/5", -1},
    {"1/4,3/4", "1/4,3/4", "1/10,3/10,7/10,9/10", -1},
    {"1/4,3/4", "1/6,5/6", "1/10,3/10,7/10,9/10", -1},
};

// populated cells of the quaternion table: D, mu -> ramified places
// (0 stands for the infinite place)
struct QuaternionCell {
  long d, mu;
  std::vector<long> ramified;
};
inline const std::vector<QuaternionCell> table7 = {
    {-3, -3, {3, 0}}, {-3, -2, {2, 0}}, {-3, -1, {3, 0}}, {-3, 2, {2, 3}},
    {-4, -3, {3, 0}}, {-4, -2, {2, 0}}, {-4, -1, {2, 0}},
};

}  // namespace tabledata

#endif
