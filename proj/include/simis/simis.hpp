#pragma once

#include "simis/clutter.hpp"
#include "simis/errors.hpp"
#include "simis/graph.hpp"
#include "simis/incidence_matrix.hpp"
#include "simis/lp_duality.hpp"
#include "simis/monomial.hpp"
#include "simis/theorem.hpp"
#include "simis/vertex_set.hpp"
