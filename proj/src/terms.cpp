#include "zetaglue/terms.hpp"

#include <cmath>

namespace zg {

DetReport& DetReport::add(std::string label, double value, std::string formula_text, int phase) {
  terms.push_back({std::move(label), value, phase, std::move(formula_text)});
  return *this;
}

DetReport& DetReport::add(std::string label, const SignedLog& l, std::string formula_text, double scale) {
  return add(std::move(label), scale * l.log_modulus, std::move(formula_text),
             static_cast<int>(std::lround(scale * l.phase)));
}

DetReport& DetReport::add(std::string label, const RegularizedDet& d, std::string formula_text, double scale) {
  truncation += std::abs(scale) * d.truncation;
  return add(std::move(label), scale * d.log_modulus, std::move(formula_text),
             static_cast<int>(std::lround(scale * d.phase_multiple)));
}

void DetReport::finish() {
  double v = 0.0;
  int p = 0;
  for (const auto& t : terms) {
    v += t.value;
    p += t.phase;
  }
  log_det = v;
  phase_multiple = p;
}

double DetReport::term(const std::string& label) const {
  for (const auto& t : terms)
    if (t.label == label) return t.value;
  return 0.0;
}

}  // namespace zg
