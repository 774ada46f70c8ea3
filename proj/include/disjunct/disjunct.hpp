#pragma once

#include "disjunct/bitset.hpp"
#include "disjunct/bounds.hpp"
#include "disjunct/combinatorics.hpp"
#include "disjunct/constructions.hpp"
#include "disjunct/disjunctness.hpp"
#include "disjunct/dmat.hpp"
#include "disjunct/errors.hpp"
#include "disjunct/group_testing.hpp"
#include "disjunct/matching.hpp"
#include "disjunct/matrix.hpp"
#include "disjunct/private_subsets.hpp"
#include "disjunct/search.hpp"
