#ifndef STABLECONS_STABLECONS_HPP
#define STABLECONS_STABLECONS_HPP

#include "stablecons/decision.hpp"
#include "stablecons/errors.hpp"
#include "stablecons/formula.hpp"
#include "stablecons/parse.hpp"
#include "stablecons/rational.hpp"
#include "stablecons/reduction.hpp"
#include "stablecons/semantics.hpp"

#endif  // STABLECONS_STABLECONS_HPP
