#pragma once

#include "treesec/duality.hpp"
#include "treesec/errors.hpp"
#include "treesec/io.hpp"
#include "treesec/model.hpp"
#include "treesec/oracle.hpp"
#include "treesec/profile.hpp"
#include "treesec/rational.hpp"
#include "treesec/solver.hpp"
#include "treesec/strategy.hpp"
#include "treesec/taxonomy.hpp"
#include "treesec/transform.hpp"
#include "treesec/tree.hpp"

