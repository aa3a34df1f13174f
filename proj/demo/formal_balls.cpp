// Formal balls over a two-point Łukasiewicz category: order, a directed join
// and the way-below relation.

#include <iostream>

#include "qcat/balls.hpp"
#include "qcat/io.hpp"

#ifndef QCAT_DATA_DIR
#define QCAT_DATA_DIR "data"
#endif

using namespace qcat;

int main() {
  const EnrichedCategory x = category_from_json(read_json_file(QCAT_DATA_DIR "/a2.json"));
  const Value third = Value::parse_exact("1/3"), two_thirds = Value::parse_exact("2/3"), one = x.one();

  const bool below = ball_leq(x, {0, two_thirds}, {1, one});
  std::cout << "a@2/3 below b@1: " << below << "\n";

  const auto join = directed_join(x, {{0, third}, {0, two_thirds}, {1, one}});
  if (join) std::cout << "join of a@1/3, a@2/3, b@1: " << ball_name(x, *join) << "\n";

  const Rel w = way_below_distributor(x);
  const auto wb = ball_way_below(x, w, {0, third}, {1, one});
  std::cout << "a@1/3 way below b@1: " << wb.holds << "\n\n" << balls_dot(x);
  return below && join && wb.holds ? 0 : 1;
}
