#pragma once

#include "bounds.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "prng.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "search.hpp"
#include "verify.hpp"
#include "weights.hpp"
