#pragma once

#include "symideal/poly_core.hpp"
#include "symideal/sym_order.hpp"
#include "symideal/symmetrize.hpp"
#include "symideal/finite_gb.hpp"
#include "symideal/equi_reduce.hpp"
#include "symideal/toric_kernel.hpp"
#include "symideal/chains.hpp"
#include "symideal/toric.hpp"
#include "symideal/io.hpp"
