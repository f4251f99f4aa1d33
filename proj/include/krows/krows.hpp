#pragma once

// Umbrella header: BDD parsing and traversal, exact model counting, the
// cardinality-set schedule, and the three fixed-cardinality enumerators.

#include "krows/bdd.hpp"
#include "krows/check.hpp"
#include "krows/counting.hpp"
#include "krows/dimacs.hpp"
#include "krows/enumerate.hpp"
#include "krows/oracle.hpp"
#include "krows/row.hpp"
#include "krows/schedule.hpp"
#include "krows/types.hpp"
