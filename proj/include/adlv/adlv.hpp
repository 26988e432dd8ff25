#pragma once

#include "affine.hpp"
#include "chamber_set.hpp"
#include "classes.hpp"
#include "conjugacy.hpp"
#include "folding.hpp"
#include "gallery.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "root_system.hpp"
#include "solver.hpp"
#include "subset.hpp"
#include "superset.hpp"
#include "symmetry.hpp"
