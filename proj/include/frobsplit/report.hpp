#ifndef FROBSPLIT_REPORT_HPP
#define FROBSPLIT_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobsplit/frobenius.hpp"
#include "frobsplit/ideal.hpp"
#include "frobsplit/polynomial.hpp"
#include "frobsplit/ring.hpp"

namespace frobsplit {

using ojson = nlohmann::ordered_json;

inline ojson ring_to_json(const Ring& r) {
  ojson j;
  j["p"] = r->p;
  j["vars"] = r->vars;
  j["order"] = order_name(r->order);
  return j;
}

inline ojson rational_to_json(int64_t num, int64_t den) {
  ojson j;
  j["num"] = num;
  j["den"] = den;
  Rational red = rational_reduce({num, den});
  j["reduced"] = std::to_string(red.num) + "/" + std::to_string(red.den);
  return j;
}

inline ojson rational_to_json(const Rational& r) { return rational_to_json(r.num, r.den); }

inline std::vector<std::string> ideal_gen_strings(const Ideal& I) {
  std::vector<std::string> out;
  const std::vector<Polynomial>& gens = I.has_gb() ? *I.gb : I.gens;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(poly_to_string(g));
  return out;
}

inline ojson splitting_report_to_json(const Ring& r, const Polynomial& f,
                                      const SplittingReport& rep) {
  ojson j;
  j["v"] = 1;
  j["kind"] = "splitting-report";
  j["ring"] = ring_to_json(r);
  j["f"] = poly_to_string(f);
  j["fpure"] = rep.fpure;
  ojson levels = ojson::array();
  for (const auto& lv : rep.levels) {
    ojson e;
    e["e"] = lv.e;
    e["feasible"] = lv.feasible;
    if (lv.feasible) {
      e["a"] = lv.a;
      e["ideal"] = lv.ideal_gens;
    } else {
      e["reason"] = lv.reason;
    }
    levels.push_back(std::move(e));
  }
  j["levels"] = std::move(levels);
  j["prime_known"] = rep.prime_known;
  if (rep.prime_known) {
    j["prime"] = rep.prime_gens;
    j["prime_method"] = rep.prime_method;
    j["primality_certified"] = rep.primality_certified;
    j["zero_in_quotient"] = rep.zero_in_quotient;
    j["iterations"] = rep.iterations;
    j["dimension"] = rep.dimension;
    ojson ratios = ojson::array();
    for (const auto& pr : rep.ratios) ratios.push_back(rational_to_json(pr.first, pr.second));
    j["ratios"] = std::move(ratios);
  }
  return j;
}

}  // namespace frobsplit

#endif
