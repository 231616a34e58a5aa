#pragma once

#include "pslab/asymptotics.hpp"
#include "pslab/bound_grid.hpp"
#include "pslab/counting.hpp"
#include "pslab/error.hpp"
#include "pslab/exactfloor.hpp"
#include "pslab/expsum.hpp"
#include "pslab/params.hpp"
#include "pslab/specfun.hpp"
#include "pslab/witness.hpp"
