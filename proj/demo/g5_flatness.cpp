// Classifies a weight on the five-point Gödel chain that is conically flat
// but neither an ideal nor flat, and prints the witnesses.

#include <iostream>

#include "qcat/classify.hpp"
#include "qcat/io.hpp"

#ifndef QCAT_DATA_DIR
#define QCAT_DATA_DIR "data"
#endif

using namespace qcat;

int main() {
  const EnrichedCategory x = category_from_json(read_json_file(QCAT_DATA_DIR "/g5.json"));
  const Weight phi = make_weight(x, values_from_json(read_json_file(QCAT_DATA_DIR "/g5_weight.json"), Mode::Exact));
  const WeightClassReport r = classify(x, phi);

  std::cout << "representable " << r.representable << "\ncauchy " << r.cauchy << "\nideal " << r.ideal
            << "\nconically_flat " << r.conically_flat << "\nflat " << r.flat << "\n";
  if (const auto& w = r.ideal_detail.witness)
    std::cout << "no common bound for " << x.names()[w->first] << " and " << x.names()[w->second] << "\n";
  if (const auto& w = r.flat_detail.witness) {
    std::cout << "flatness fails at r = " << w->r << ", psi = (";
    for (std::size_t i = 0; i < w->psi.size(); ++i) std::cout << (i ? "," : "") << w->psi[i];
    std::cout << "): " << w->lhs << " != " << w->rhs << "\n";
  }
  return r.conically_flat && !r.ideal && !r.flat ? 0 : 1;
}
