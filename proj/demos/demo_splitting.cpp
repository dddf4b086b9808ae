// Walks one hypersurface through the full invariant stack and prints what it
// finds: purity, splitting ideals and numbers, the stable prime, dimension,
// and the effect of a sanctioned perturbation.

#include <iostream>

#include "frobsplit/frobsplit.hpp"

using namespace frobsplit;

int main() {
  Ring r = make_ring(7, {"x0", "x1", "x2", "x3"}, Order::grevlex);
  Polynomial f = parse_poly("x0^2 - x1^6*x2^2 + x3^3", r);
  HypersurfaceContext ctx = make_context(r, f);

  std::cout << "ring:  " << ring_spec_to_string(r);
  std::cout << "f    = " << poly_to_string(f) << "\n\n";

  std::cout << "F-pure: " << (fedder_fpure(ctx) ? "yes" : "no") << "\n";

  for (int e = 1; e <= 2; ++e) {
    Ideal Ie = splitting_ideal(ctx, e);
    std::cout << "I_" << e << " = (";
    const auto& gb = *groebner_basis(Ie).gb;
    for (size_t i = 0; i < gb.size(); ++i)
      std::cout << (i ? ", " : "") << poly_to_string(gb[i]);
    std::cout << "),  a_" << e << " = " << zero_dim_length(Ie) << "\n";
  }

  SplittingPrimeResult pr = splitting_prime(ctx);
  std::cout << "\nstable prime (" << prime_method_name(pr.method) << ", "
            << pr.iterations << " iterations"
            << (pr.primality_certified ? ", certified" : "") << "): (";
  for (size_t i = 0; i < pr.prime.gb->size(); ++i)
    std::cout << (i ? ", " : "") << poly_to_string((*pr.prime.gb)[i]);
  std::cout << ")\n";
  std::cout << "splitting dimension: " << splitting_dimension(ctx, pr) << "\n";

  Rational rt = splitting_ratio_estimate(ctx, 1);
  std::cout << "a_1 / p^dim = " << rt.num << "/" << rt.den << "\n\n";

  Polynomial eps = parse_poly("x1^7", r);
  PerturbationOutcome o = evaluate_perturbation_A(ctx, eps, {1});
  std::cout << "perturb by " << poly_to_string(eps) << ": a_1 " << o.a_before[0] << " -> "
            << o.a_after[0] << (o.verdict ? "  (stable)" : "  (changed!)") << "\n";
  return 0;
}
