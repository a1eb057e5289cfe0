#pragma once

#include "lpsum/component_geometry.hpp"
#include "lpsum/errors.hpp"
#include "lpsum/grids.hpp"
#include "lpsum/interval.hpp"
#include "lpsum/json_io.hpp"
#include "lpsum/oracles.hpp"
#include "lpsum/orthogonality.hpp"
#include "lpsum/semi_inner_product.hpp"
#include "lpsum/sum_spaces.hpp"
#include "lpsum/symmetry.hpp"
#include "lpsum/tolerance.hpp"
