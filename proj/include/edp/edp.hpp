#pragma once

// Umbrella header.

#include "edp/cli.hpp"
#include "edp/constructions.hpp"
#include "edp/errors.hpp"
#include "edp/exactlin.hpp"
#include "edp/gmodule.hpp"
#include "edp/model.hpp"
#include "edp/pgroup.hpp"
#include "edp/presentation.hpp"
#include "edp/solver.hpp"
