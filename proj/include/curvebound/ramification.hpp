#pragma once

#include "curvebound/ramification/enumerate.hpp"
#include "curvebound/ramification/genus.hpp"
#include "curvebound/ramification/solve.hpp"
#include "curvebound/ramification/wild_stabilizer.hpp"
