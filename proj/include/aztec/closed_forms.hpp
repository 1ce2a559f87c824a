#pragma once

#include "aztec/closed_forms/alpha_window.hpp"
#include "aztec/closed_forms/bars.hpp"
#include "aztec/closed_forms/dipoles.hpp"
#include "aztec/closed_forms/monomers.hpp"
#include "aztec/closed_forms/moves.hpp"
#include "aztec/closed_forms/slits.hpp"
