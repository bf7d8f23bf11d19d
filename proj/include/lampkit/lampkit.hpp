#pragma once

#include "lampkit/congruence.hpp"
#include "lampkit/construction.hpp"
#include "lampkit/error.hpp"
#include "lampkit/geometry.hpp"
#include "lampkit/io.hpp"
#include "lampkit/lamps.hpp"
#include "lampkit/lattice.hpp"
#include "lampkit/layout.hpp"
#include "lampkit/poset.hpp"
#include "lampkit/properties.hpp"
#include "lampkit/svg.hpp"
#include "lampkit/trajectories.hpp"
#include "lampkit/verify.hpp"
