// dgap - D-gap merit functions for variational inequality problems
// Copyright 2026 dgap Contributors
// Licensed under Apache 2.0

#pragma once

#include "dgap/convex_set.hpp"
#include "dgap/gap.hpp"
#include "dgap/io.hpp"
#include "dgap/problem.hpp"
#include "dgap/problems.hpp"
#include "dgap/sampling.hpp"
#include "dgap/solver.hpp"
#include "dgap/subdiff.hpp"
#include "dgap/verify.hpp"
