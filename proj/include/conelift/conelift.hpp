// SPDX-License-Identifier: Apache-2.0
#pragma once

// Umbrella header for the whole library.

#include "conelift/cone.hpp"
#include "conelift/errors.hpp"
#include "conelift/groebner.hpp"
#include "conelift/interpolate.hpp"
#include "conelift/job.hpp"
#include "conelift/lift.hpp"
#include "conelift/monomial.hpp"
#include "conelift/parse.hpp"
#include "conelift/polynomial.hpp"
#include "conelift/polynomial_gcd.hpp"
#include "conelift/rational.hpp"
#include "conelift/rational_function.hpp"
#include "conelift/trinomial.hpp"
#include "conelift/varset.hpp"
