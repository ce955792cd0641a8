#pragma once

#include "curvebound/classical/family.hpp"
#include "curvebound/classical/sporadic.hpp"
