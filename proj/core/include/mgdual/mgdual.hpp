#pragma once

// Everything in one include.

#include "mgdual/dual.hpp"
#include "mgdual/emit.hpp"
#include "mgdual/error.hpp"
#include "mgdual/grading.hpp"
#include "mgdual/ideal.hpp"
#include "mgdual/idealops.hpp"
#include "mgdual/matrix.hpp"
#include "mgdual/oracle.hpp"
#include "mgdual/parser.hpp"
#include "mgdual/polynomial.hpp"
#include "mgdual/rational.hpp"
#include "mgdual/recipe.hpp"
#include "mgdual/subspace.hpp"
