#pragma once

// Umbrella include for the union-intersecting set-system toolkit.

#include "uif/bounds.hpp"
#include "uif/constructions.hpp"
#include "uif/errors.hpp"
#include "uif/family.hpp"
#include "uif/json_io.hpp"
#include "uif/matching.hpp"
#include "uif/predicates.hpp"
#include "uif/problem.hpp"
#include "uif/random_family.hpp"
#include "uif/reproduce.hpp"
#include "uif/search.hpp"
#include "uif/sunflower.hpp"
