#pragma once

#include "curvebound/permgroup/algorithms.hpp"
#include "curvebound/permgroup/element_table.hpp"
#include "curvebound/permgroup/generator_file.hpp"
#include "curvebound/permgroup/perm_group.hpp"
#include "curvebound/permgroup/permutation.hpp"
