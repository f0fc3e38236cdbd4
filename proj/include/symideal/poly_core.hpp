#pragma once

#include "symideal/action.hpp"
#include "symideal/errors.hpp"
#include "symideal/monomial.hpp"
#include "symideal/permutation.hpp"
#include "symideal/polynomial.hpp"
#include "symideal/term_order.hpp"
#include "symideal/text.hpp"
#include "symideal/variable.hpp"
