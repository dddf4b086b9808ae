#ifndef FROBSPLIT_FROBSPLIT_HPP
#define FROBSPLIT_FROBSPLIT_HPP

// Convenience umbrella: everything except the CLI layer.

#include "frobsplit/error.hpp"
#include "frobsplit/experiments.hpp"
#include "frobsplit/fp.hpp"
#include "frobsplit/frobenius.hpp"
#include "frobsplit/gb_cache.hpp"
#include "frobsplit/ideal.hpp"
#include "frobsplit/monomial.hpp"
#include "frobsplit/parse.hpp"
#include "frobsplit/polynomial.hpp"
#include "frobsplit/quotient.hpp"
#include "frobsplit/report.hpp"
#include "frobsplit/ring.hpp"

#endif
