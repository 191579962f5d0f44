#pragma once

#include "reemobius/arith.hpp"
#include "reemobius/inversion.hpp"
#include "reemobius/lattice_oracle.hpp"
#include "reemobius/numtheory.hpp"
#include "reemobius/permutation.hpp"
#include "reemobius/ree_catalog.hpp"
#include "reemobius/target.hpp"
