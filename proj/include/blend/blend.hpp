// SPDX-License-Identifier: MIT
#pragma once

/// \file blend.hpp
/// Umbrella header: two-point Taylor blends, their derivatives, integrals,
/// quadrature rules, conditioning tools and piecewise strings.
///
/// \code
/// #include <blend/blend.hpp>
///
/// auto h = blend::gen_cospi(8, 8);                 // cos(pi s) on [0, 1]
/// double v = blend::eval(h, 0.25);                  // ~ cos(pi / 4)
/// auto d = blend::eval_derivatives(h, 0.25, 3);     // value and 3 derivatives
/// double area = blend::integrate(h);                // ~ 0
/// auto rule = blend::quadrature_weights(4, 4);      // exact rational weights
/// \endcode

#include <blend/analysis.hpp>
#include <blend/calculus.hpp>
#include <blend/core.hpp>
#include <blend/eval.hpp>
#include <blend/generators.hpp>
#include <blend/jet.hpp>
#include <blend/rational.hpp>
#include <blend/string.hpp>
