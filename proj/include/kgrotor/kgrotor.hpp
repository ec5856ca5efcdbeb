#pragma once

#include "kgrotor/units.hpp"
#include "kgrotor/rotor.hpp"
#include "kgrotor/rotational_constants.hpp"
#include "kgrotor/energy.hpp"
#include "kgrotor/lines.hpp"
#include "kgrotor/fit.hpp"
#include "kgrotor/molecule_db.hpp"
