#pragma once

#include "knot818/allocation.hpp"
#include "knot818/braid.hpp"
#include "knot818/diagram.hpp"
#include "knot818/error.hpp"
#include "knot818/fixture.hpp"
#include "knot818/geometry.hpp"
#include "knot818/invariants.hpp"
#include "knot818/laurent.hpp"
#include "knot818/notation.hpp"
#include "knot818/site.hpp"
#include "knot818/traversal.hpp"
