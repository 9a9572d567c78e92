#pragma once

// Umbrella header for the psig library: exact arithmetic for the
// element-order-sum invariant, explicit permutation groups, the group
// family constructors, per-group analysis, and the verification harness.

#include "psig/analysis.hpp"
#include "psig/arith.hpp"
#include "psig/corpus.hpp"
#include "psig/errors.hpp"
#include "psig/families.hpp"
#include "psig/group.hpp"
#include "psig/isomorphism.hpp"
#include "psig/perm.hpp"
#include "psig/rational.hpp"
#include "psig/theorems.hpp"
