#pragma once

#include "curvebound/bounds/audit.hpp"
#include "curvebound/bounds/classify.hpp"
#include "curvebound/bounds/expr.hpp"
#include "curvebound/bounds/interval.hpp"
#include "curvebound/bounds/power_bound.hpp"
#include "curvebound/bounds/registry.hpp"
