#pragma once

// Umbrella header for the doob library.

#include "campaign.hpp"
#include "charsum.hpp"
#include "codes.hpp"
#include "enumerators.hpp"
#include "io.hpp"
#include "rings.hpp"
#include "space.hpp"
#include "zrep.hpp"
