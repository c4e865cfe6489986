#include "zetaglue/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "zetaglue/error.hpp"
#include "zetaglue/numeric.hpp"
#include "zetaglue/special.hpp"

namespace zg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

// Detects r = p/q with small q; used to give torus eigenvalues exact integer keys.
std::optional<std::pair<std::int64_t, std::int64_t>> as_rational(double r) {
  double x = r;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 40; ++it) {
    const double a = std::floor(x);
    if (a > 1e9) break;
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > 1000000) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    if (std::abs(r - static_cast<double>(p1) / static_cast<double>(q1)) <= 4e-16 * r)
      return std::make_pair(p1, q1);
    const double frac = x - a;
    if (frac == 0.0) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

double circle_trace(double length, double t) {
  // sum_{k in Z} exp(-t (2 pi k / length)^2), directly or through the Poisson dual.
  const double c = 2.0 * kPi / length;
  CompensatedSum acc;
  if (t * c * c >= 1.0) {
    acc.add(1.0);
    for (int k = 1;; ++k) {
      const double term = 2.0 * std::exp(-t * c * c * k * k);
      acc.add(term);
      if (term < 1e-18) break;
    }
    return acc.value();
  }
  const double pref = length / std::sqrt(4.0 * kPi * t);
  acc.add(1.0);
  for (int n = 1;; ++n) {
    const double term = 2.0 * std::exp(-double(n) * n * length * length / (4.0 * t));
    acc.add(term);
    if (term < 1e-18) break;
  }
  return pref * acc.value();
}

std::vector<SpectrumEntry> torus_spectrum(const FlatTorus& tor, double cutoff) {
  const double c1 = 2.0 * kPi / tor.length1, c2 = 2.0 * kPi / tor.length2;
  const auto jmax = static_cast<std::int64_t>(std::floor(std::sqrt(cutoff) / c1));
  const auto kmax = static_cast<std::int64_t>(std::floor(std::sqrt(cutoff) / c2));
  const auto ratio = as_rational((c2 * c2) / (c1 * c1));

  std::map<std::pair<std::int64_t, std::int64_t>, long long> counts;
  for (std::int64_t j = 0; j <= jmax; ++j) {
    for (std::int64_t k = 0; k <= kmax; ++k) {
      const double mu = c1 * c1 * double(j * j) + c2 * c2 * double(k * k);
      if (mu > cutoff) break;
      const long long mult = (j == 0 ? 1 : 2) * (k == 0 ? 1 : 2);
      std::pair<std::int64_t, std::int64_t> key;
      if (ratio)
        key = {ratio->second * j * j + ratio->first * k * k, 0};
      else
        key = {j * j, k * k};
      counts[key] += mult;
    }
  }
  std::vector<SpectrumEntry> out;
  out.reserve(counts.size());
  for (const auto& [key, mult] : counts) {
    double mu;
    if (ratio)
      mu = c1 * c1 * double(key.first) / double(ratio->second);
    else
      mu = c1 * c1 * double(key.first) + c2 * c2 * double(key.second);
    out.push_back({mu, mult});
  }
  std::sort(out.begin(), out.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.eigenvalue < b.eigenvalue; });
  return out;
}

double parse_number(const nlohmann::json& v, const char* what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == s.size() && used > 0, ErrorKind::Validation,
            std::string("cannot parse ") + what + " '" + s + "'");
    return x;
  }
  fail(ErrorKind::Validation, std::string(what) + " must be a number or decimal string");
}

}  // namespace

double HeatExpansion::coeff(int j) const {
  if (j < 0) return 0.0;
  require(static_cast<std::size_t>(j) < coeffs.size(), ErrorKind::Validation,
          "heat coefficient a_" + std::to_string(j) + " is required but not supplied");
  return coeffs[j];
}

CrossSection CrossSection::point() { return CrossSection(Point{}); }

CrossSection CrossSection::circle(double length) {
  require(length > 0.0 && std::isfinite(length), ErrorKind::Validation, "circle length must be positive");
  return CrossSection(Circle{length});
}

CrossSection CrossSection::torus(double length1, double length2) {
  require(length1 > 0.0 && length2 > 0.0 && std::isfinite(length1) && std::isfinite(length2),
          ErrorKind::Validation, "torus lengths must be positive");
  return CrossSection(FlatTorus{length1, length2});
}

CrossSection CrossSection::explicit_spectrum(ExplicitSpectrum spec) {
  require(spec.dim >= 0, ErrorKind::Validation, "explicit spectrum dim must be non-negative");
  require(!spec.entries.empty(), ErrorKind::Validation, "explicit spectrum has no entries");
  double prev = -1.0;
  for (const auto& e : spec.entries) {
    require(std::isfinite(e.eigenvalue) && e.eigenvalue >= 0.0, ErrorKind::Validation,
            "explicit eigenvalues must be finite and non-negative");
    require(e.multiplicity >= 1, ErrorKind::Validation, "multiplicities must be >= 1");
    require(e.eigenvalue > prev, ErrorKind::Validation,
            "explicit entries must be sorted ascending with duplicates merged");
    prev = e.eigenvalue;
  }
  if (spec.complete_up_to <= 0.0) spec.complete_up_to = spec.entries.back().eigenvalue;
  if (spec.heat) {
    spec.heat->cross_dim = spec.dim;
    for (double a : spec.heat->coeffs)
      require(std::isfinite(a), ErrorKind::Validation, "heat coefficients must be finite");
  }
  return CrossSection(std::make_shared<const ExplicitSpectrum>(std::move(spec)));
}

CrossSection CrossSection::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Validation, std::string("explicit spectrum: ") + e.what());
  }
  require(doc.is_object() && doc.contains("dim") && doc.contains("entries"), ErrorKind::Validation,
          "explicit spectrum needs 'dim' and 'entries'");
  ExplicitSpectrum spec;
  require(doc["dim"].is_number_integer(), ErrorKind::Validation, "'dim' must be an integer");
  spec.dim = doc["dim"].get<int>();
  for (const auto& row : doc["entries"]) {
    require(row.is_array() && row.size() == 2, ErrorKind::Validation, "each entry must be [mu, multiplicity]");
    require(row[1].is_number_integer(), ErrorKind::Validation, "multiplicity must be an integer");
    spec.entries.push_back({parse_number(row[0], "eigenvalue"), row[1].get<long long>()});
  }
  if (doc.contains("heat")) {
    HeatExpansion h;
    for (const auto& c : doc["heat"].at("coeffs")) h.coeffs.push_back(parse_number(c, "heat coefficient"));
    spec.heat = std::move(h);
  }
  if (doc.contains("cutoff")) spec.complete_up_to = parse_number(doc["cutoff"], "cutoff");
  return explicit_spectrum(std::move(spec));
}

CrossSection CrossSection::load(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::Validation, "cannot open spectrum file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

CrossSection CrossSection::parse(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  const std::string head = descriptor.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : descriptor.substr(colon + 1);
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == s.size() && used > 0, ErrorKind::Validation, "bad number in cross-section '" + descriptor + "'");
    return x;
  };
  if (head == "point" && rest.empty()) return point();
  if (head == "circle") return circle(number(rest));
  if (head == "torus") {
    const auto comma = rest.find(',');
    require(comma != std::string::npos, ErrorKind::Validation, "torus needs two lengths: torus:L1,L2");
    return torus(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
  }
  if (head == "explicit" && !rest.empty()) return load(rest);
  fail(ErrorKind::Validation, "unknown cross-section '" + descriptor + "'");
}

const ExplicitSpectrum* CrossSection::as_explicit() const {
  if (auto p = std::get_if<std::shared_ptr<const ExplicitSpectrum>>(&kind_)) return p->get();
  return nullptr;
}

int CrossSection::cross_dim() const {
  return std::visit(overloaded{[](const Point&) { return 0; }, [](const Circle&) { return 1; },
                               [](const FlatTorus&) { return 2; },
                               [](const std::shared_ptr<const ExplicitSpectrum>& e) { return e->dim; }},
                    kind_);
}

std::string CrossSection::describe() const {
  char buf[96];
  return std::visit(overloaded{[](const Point&) { return std::string("point"); },
                               [&](const Circle& c) {
                                 std::snprintf(buf, sizeof buf, "circle:%.17g", c.length);
                                 return std::string(buf);
                               },
                               [&](const FlatTorus& t) {
                                 std::snprintf(buf, sizeof buf, "torus:%.17g,%.17g", t.length1, t.length2);
                                 return std::string(buf);
                               },
                               [&](const std::shared_ptr<const ExplicitSpectrum>& e) {
                                 std::snprintf(buf, sizeof buf, "explicit(dim=%d, %zu entries)", e->dim,
                                               e->entries.size());
                                 return std::string(buf);
                               }},
                    kind_);
}

std::vector<SpectrumEntry> enumerate_spectrum(const CrossSection& cs, double cutoff) {
  require(cutoff > 0.0, ErrorKind::Domain, "spectral cutoff must be positive");
  return std::visit(
      overloaded{
          [](const Point&) { return std::vector<SpectrumEntry>{{0.0, 1}}; },
          [&](const Circle& c) {
            const double step = 2.0 * kPi / c.length;
            std::vector<SpectrumEntry> out{{0.0, 1}};
            for (long long k = 1;; ++k) {
              const double mu = step * step * double(k) * double(k);
              if (mu > cutoff) break;
              out.push_back({mu, 2});
            }
            return out;
          },
          [&](const FlatTorus& t) { return torus_spectrum(t, cutoff); },
          [&](const std::shared_ptr<const ExplicitSpectrum>& e) {
            if (cutoff > e->complete_up_to)
              throw InsufficientSpectrumError("explicit spectrum is complete only up to " +
                                                  std::to_string(e->complete_up_to) + ", requested " +
                                                  std::to_string(cutoff),
                                              e->complete_up_to);
            std::vector<SpectrumEntry> out;
            for (const auto& en : e->entries) {
              if (en.eigenvalue > cutoff) break;
              out.push_back(en);
            }
            return out;
          }},
      cs.kind());
}

double trusted_cutoff(const CrossSection& cs) {
  if (const auto* e = cs.as_explicit()) return e->complete_up_to;
  return kInf;
}

HeatExpansion heat_coefficients(const CrossSection& cs, int order) {
  require(order >= 0, ErrorKind::Domain, "heat expansion order must be non-negative");
  HeatExpansion h;
  h.cross_dim = cs.cross_dim();
  h.coeffs.assign(order + 1, 0.0);
  std::visit(overloaded{[&](const Point&) { h.coeffs[0] = 1.0; },
                        [&](const Circle& c) { h.coeffs[0] = c.length / std::sqrt(4.0 * kPi); },
                        [&](const FlatTorus& t) { h.coeffs[0] = t.length1 * t.length2 / (4.0 * kPi); },
                        [&](const std::shared_ptr<const ExplicitSpectrum>& e) {
                          require(e->heat.has_value(), ErrorKind::Validation,
                                  "heat data required for an explicit cross-section");
                          h = *e->heat;
                          if (h.coeffs.size() > static_cast<std::size_t>(order + 1)) h.coeffs.resize(order + 1);
                        }},
             cs.kind());
  return h;
}

long long kernel_dim(const CrossSection& cs) {
  if (const auto* e = cs.as_explicit())
    return e->entries.front().eigenvalue == 0.0 ? e->entries.front().multiplicity : 0;
  return 1;
}

double heat_trace(const CrossSection& cs, double t) {
  require(t > 0.0 && std::isfinite(t), ErrorKind::Domain, "heat_trace requires t > 0");
  return std::visit(
      overloaded{[](const Point&) { return 1.0; }, [&](const Circle& c) { return circle_trace(c.length, t); },
                 [&](const FlatTorus& tor) { return circle_trace(tor.length1, t) * circle_trace(tor.length2, t); },
                 [&](const std::shared_ptr<const ExplicitSpectrum>& e) {
                   CompensatedSum acc;
                   for (const auto& en : e->entries) {
                     if (en.eigenvalue > e->complete_up_to) break;
                     acc.add(double(en.multiplicity) * std::exp(-t * en.eigenvalue));
                   }
                   // Gaussian tail from the counting bound: sum b_n t^{-n/2} Gamma(n/2 + 1, t Lambda).
                   const CountingBound nb = counting_bound(cs);
                   double tail = 0.0;
                   for (std::size_t n = 0; n < nb.poly.size(); ++n)
                     if (nb.poly[n] != 0.0)
                       tail += nb.poly[n] * std::pow(t, -0.5 * n) * upper_gamma(0.5 * n + 1.0, t * e->complete_up_to);
                   const double sum = acc.value();
                   if (tail > 1e-12 * sum)
                     throw InsufficientSpectrumError("heat trace tail bound " + std::to_string(tail) +
                                                         " exceeds relative tolerance",
                                                     e->complete_up_to);
                   return sum;
                 }},
      cs.kind());
}

CountingBound counting_bound(const CrossSection& cs) {
  return std::visit(
      overloaded{[](const Point&) { return CountingBound{{1.0}}; },
                 [](const Circle& c) { return CountingBound{{1.0, 2.0 * c.length / (2.0 * kPi)}}; },
                 [](const FlatTorus& t) {
                   const double i1 = 2.0 * t.length1 / (2.0 * kPi), i2 = 2.0 * t.length2 / (2.0 * kPi);
                   return CountingBound{{1.0, i1 + i2, i1 * i2}};
                 },
                 [&](const std::shared_ptr<const ExplicitSpectrum>& e) {
                   // Twice the Weyl law plus everything stored: a working bound, not a theorem.
                   CountingBound b;
                   b.poly.assign(e->dim + 1, 0.0);
                   long long total = 0;
                   for (const auto& en : e->entries) total += en.multiplicity;
                   b.poly[0] = double(total);
                   double a0 = 0.0;
                   if (e->heat && !e->heat->coeffs.empty()) a0 = std::abs(e->heat->coeffs[0]);
                   if (e->dim > 0) b.poly[e->dim] += 2.0 * a0 / std::tgamma(0.5 * e->dim + 1.0);
                   return b;
                 }},
      cs.kind());
}

double exp_tail_bound(const CrossSection& cs, double r, double rho) {
  require(r > 0.0 && rho >= 0.0, ErrorKind::Domain, "exp_tail_bound requires r > 0");
  if (cs.is_point()) return 0.0;
  if (const auto* c = cs.as_circle()) {
    const double step = 2.0 * kPi / c->length;
    const double k = std::floor(rho / step) + 1.0;
    return 2.0 * std::exp(-r * step * k) / (-std::expm1(-r * step));
  }
  const CountingBound nb = counting_bound(cs);
  double tail = 0.0;
  for (std::size_t n = 0; n < nb.poly.size(); ++n)
    if (nb.poly[n] != 0.0)
      tail += nb.poly[n] * (rho > 0.0 ? upper_gamma(n + 1.0, r * rho) : std::tgamma(n + 1.0)) / std::pow(r, double(n));
  return tail;
}

double smallest_positive_eigenvalue(const CrossSection& cs) {
  return std::visit(overloaded{[](const Point&) { return kInf; },
                               [](const Circle& c) { return std::pow(2.0 * kPi / c.length, 2); },
                               [](const FlatTorus& t) {
                                 return std::pow(2.0 * kPi / std::max(t.length1, t.length2), 2);
                               },
                               [](const std::shared_ptr<const ExplicitSpectrum>& e) {
                                 for (const auto& en : e->entries)
                                   if (en.eigenvalue > 0.0 && en.eigenvalue <= e->complete_up_to) return en.eigenvalue;
                                 throw InsufficientSpectrumError("no positive eigenvalue below the explicit cutoff",
                                                                 e->complete_up_to);
                               }},
                    cs.kind());
}

}  // namespace zg
