#pragma once

#include "ucycle/bigint.hpp"
#include "ucycle/counting.hpp"
#include "ucycle/digraph.hpp"
#include "ucycle/exact_matrix.hpp"
#include "ucycle/perm.hpp"
#include "ucycle/spectral.hpp"
