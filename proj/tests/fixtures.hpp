#pragma once

// Golden data transcribed from drawn quivers, shared by the unit tests and the acceptance binary.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cc/surfaces.hpp"

namespace fixtures {

// Once-punctured torus, k=4. Drawn node ids repeat glued vertices; id_label maps them to quiver labels.
inline const std::vector<int> kTorusIdLabel{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 9, 12, 10, 13, 14, 11, 5, 2, 0};

inline const std::vector<std::pair<int, int>> kTorusLeftIds{
    {1, 0},   {0, 3},   {3, 1},   {12, 1},  {1, 13},  {3, 2},   {2, 6},   {4, 3},   {6, 3},   {3, 7},   {7, 4},   {13, 4},
    {4, 15},  {6, 5},   {5, 9},   {7, 6},   {9, 6},   {6, 10},  {8, 7},   {10, 7},  {7, 11},  {11, 8},  {15, 8},  {8, 18},
    {13, 12}, {14, 13}, {15, 13}, {13, 16}, {16, 14}, {16, 15}, {18, 15}, {15, 19}, {17, 16}, {19, 16}, {16, 20}, {20, 17}};

// After mutating at 2, 4 and 10; the last four arrows wrap across the identified sides.
inline const std::vector<std::pair<int, int>> kTorusRightIds{
    {1, 0},   {0, 3},  {3, 1},   {12, 1},  {1, 13},  {2, 3},   {6, 2},   {3, 4},  {13, 3},  {4, 7},   {4, 13},
    {15, 4},  {6, 5},  {5, 9},   {9, 6},   {10, 6},  {8, 7},   {7, 10},  {7, 11}, {7, 15},  {11, 8},  {15, 8},
    {8, 18},  {13, 12}, {13, 14}, {14, 16}, {18, 15}, {19, 15}, {17, 16}, {16, 19}, {16, 20}, {20, 17}, {6, 13},
    {16, 7},  {3, 16}, {15, 6}};

inline const std::map<std::pair<int, int>, int> kTorusPositions{
    {{0, 70}, 0},    {{70, 70}, 1},    {{0, 140}, 2},    {{70, 140}, 3},   {{140, 140}, 4},  {{0, 210}, 5},   {{70, 210}, 6},
    {{140, 210}, 7}, {{210, 210}, 8},  {{70, 280}, 9},   {{140, 280}, 10}, {{210, 280}, 11}, {{70, 0}, 9},    {{140, 70}, 12},
    {{140, 0}, 10},  {{210, 140}, 13}, {{210, 70}, 14},  {{210, 0}, 11},   {{280, 210}, 5},  {{280, 140}, 2}, {{280, 70}, 0}};

inline const std::set<int> kTorusRow3{0, 1, 5, 8, 9, 11};
inline const std::set<int> kTorusMidpoints{2, 4, 10};
inline const std::set<int> kTorusRow2{2, 3, 4, 6, 7, 10, 12, 13, 14};

// Rhombus sum for row 2 as {numerator pair, denominator pair} in drawn labels.
using Term = std::pair<std::pair<int, int>, std::pair<int, int>>;
inline const std::vector<Term> kTorusTwelveTerms{
    {{0, 6}, {2, 3}},   {{1, 7}, {3, 4}},    {{1, 13}, {4, 12}},  {{9, 14}, {10, 12}}, {{7, 9}, {6, 10}},  {{3, 5}, {2, 6}},
    {{5, 14}, {2, 13}}, {{8, 12}, {4, 13}},  {{3, 8}, {4, 7}},    {{6, 11}, {7, 10}},  {{11, 12}, {10, 14}}, {{0, 13}, {2, 14}}};
// Same sum after the midpoint mutations; the first numerator factor is the mutated midpoint variable.
inline const std::vector<Term> kTorusSixTerms{{{4, 1}, {3, 12}}, {{2, 0}, {3, 14}}, {{10, 11}, {7, 14}},
                                              {{4, 8}, {7, 13}}, {{2, 5}, {6, 13}}, {{10, 9}, {6, 12}}};

inline cc::Quiver quiver_from_ids(int n, const std::vector<int>& id_label, const std::vector<std::pair<int, int>>& ids) {
  cc::Quiver q(n);
  for (auto [a, b] : ids) q.add_arrows(id_label[static_cast<std::size_t>(a)], id_label[static_cast<std::size_t>(b)]);
  return q;
}

// Drawn label of each vertex of assemble_fg(torus_s11(), 4): the lower triangle spans NW, SW, SE and the
// upper one NW, SE, NE of a square of side 280 with y pointing down.
inline std::vector<int> torus_labels(const cc::Assembled& a) {
  std::vector<int> label(static_cast<std::size_t>(a.seed.q.n), -1);
  for (std::size_t t = 0; t < 2; ++t) {
    const auto& f = a.fragments[t];
    for (int v = 0; v < f.q.n; ++v) {
      const auto& c = f.coord[static_cast<std::size_t>(v)];
      const int b = c[1], cc = c[2];
      const std::pair<int, int> pos = t == 0 ? std::pair{70 * b, 70 * (b + cc)} : std::pair{70 * (b + cc), 70 * cc};
      const int l = kTorusPositions.at(pos);
      int& slot = label[static_cast<std::size_t>(a.global[t][static_cast<std::size_t>(v)])];
      if (slot >= 0 && slot != l) return {};
      slot = l;
    }
  }
  return label;
}

// Vertex on the arc from the puncture to boundary point j+1 of punctured_ngon, at level a.
inline int arc_vertex(const cc::Assembled& g, int j, int a) {
  const int k = g.seed.k;
  return *g.vertex_at(j, {a, 0, k - a});
}

// Printed P-cluster tables up to W, multiplicative notation ("1" is the zero weight), each row with its dosp.
struct TableRow {
  const char* pcluster;
  const char* dosp;
};

inline const std::vector<TableRow> kTableSl3D21{
    {"a*2,ab*2", "1|2|3"}, {"a,b,ab*2", "12|3"}, {"a*2,ab,ac", "1|23"},    {"a,b,ab,1", "12|3"},
    {"a,ab,ac,1", "1|23"}, {"a,b,c,1", "123^+"}, {"ab,ac,bc,1", "123^-"}};

inline const std::vector<TableRow> kTableSl3D31{
    {"a*3,ab*3", "1|2|3"},     {"a*2,ab*4", "1|2|3"},     {"a*4,ab*2", "1|2|3"},      {"a*2,ab*3,1", "1|2|3"},
    {"a*3,ab*2,1", "1|2|3"},   {"a*2,ab*2,1*2", "1|2|3"}, {"a,b,ab*4", "12|3"},       {"a,b,ab*3,1", "12|3"},
    {"a,b,ab*2,1*2", "12|3"},  {"a,b,ab,1*3", "12|3"},    {"a*4,ab,ac", "1|23"},      {"a*3,ab,ac,1", "1|23"},
    {"a*2,ab,ac,1*2", "1|23"}, {"a,ab,ac,1*3", "1|23"},   {"a,b,c,1*3", "123^+"},     {"ab,ac,bc,1*3", "123^-"}};

inline const std::vector<TableRow> kTableSl4D21{
    {"a*2,ab*2,abc*2", "1|2|3|4"},    {"a,b,ab*2,abc*2", "12|3|4"},    {"a,b,ab,abc*3", "12|3|4"},
    {"a,b,ab,abc*2,1", "12|3|4"},     {"a*2,ab*2,abc,abd", "1|2|34"},  {"a*3,ab,abc,abd", "1|2|34"},
    {"a*2,ab,abc,abd,1", "1|2|34"},   {"a*2,ab,ac,abc*2", "1|23|4"},   {"a,ab,ac,abc*3", "1|23|4"},
    {"a*3,ab,ac,abc", "1|23|4"},      {"a,ab,ac,abc*2,1", "1|23|4"},   {"a*2,ab,ac,abc,1", "1|23|4"},
    {"a,b,ab,ab,abc,abd", "12|34"},   {"a,b,ab,abc,abd,1", "12|34"},   {"a,b,abc,abd,1*2", "12|34"},
    {"a,b,c,abc,abc,1", "123^+|4"},   {"a,b,c,abc,1*2", "123^+|4"},    {"a,b,c,abc*3", "123^+|4"},
    {"ab,ac,bc,abc*3", "123^-|4"},    {"ab,ac,bc,abc*2,1", "123^-|4"}, {"a*3,ab,ac,ad", "1|234^+"},
    {"a*2,ab,ac,ad,1", "1|234^+"},    {"a*2,abc,abd,acd,1", "1|234^-"}, {"a,abc,abd,acd,1*2", "1|234^-"},
    {"a*3,abc,abd,acd", "1|234^-"},   {"abc,abd,acd,bcd,1*2", "1234^-"}, {"a,b,c,d,1*2", "1234^+"}};

// Dosps along the ladder walk for k=7: the four merging steps, then the peel.
inline const std::vector<const char*> kEverydosp{"1|2|3|4|5|6|7", "1|23|4|5|6|7", "1|234^+|5|6|7",
                                                 "1|2345^+|6|7",  "1|23456^+|7",  "1|2345^+|6|7",
                                                 "1|234^+|56|7",  "1|23|456^-|7", "1|2|3456^-|7",
                                                 "1|23456^-|7"};

}  // namespace fixtures
