#pragma once

// Umbrella header.

#include "jmrep/catalog.hpp"
#include "jmrep/errors.hpp"
#include "jmrep/genus.hpp"
#include "jmrep/half_int.hpp"
#include "jmrep/hom.hpp"
#include "jmrep/io.hpp"
#include "jmrep/linear.hpp"
#include "jmrep/membership.hpp"
#include "jmrep/phi2.hpp"
#include "jmrep/rho2.hpp"
#include "jmrep/wedge.hpp"
#include "jmrep/words.hpp"
