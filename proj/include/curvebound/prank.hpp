#pragma once

#include "curvebound/prank/cartier.hpp"
#include "curvebound/prank/curve.hpp"
#include "curvebound/prank/fp_poly.hpp"
#include "curvebound/prank/zeta.hpp"
