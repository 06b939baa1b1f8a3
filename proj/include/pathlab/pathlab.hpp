#pragma once

#include "pathlab/bitset.hpp"
#include "pathlab/bounds.hpp"
#include "pathlab/coloring.hpp"
#include "pathlab/construct.hpp"
#include "pathlab/decomp.hpp"
#include "pathlab/experiment.hpp"
#include "pathlab/gf.hpp"
#include "pathlab/gnp_oracle.hpp"
#include "pathlab/graph.hpp"
#include "pathlab/pathfind.hpp"
#include "pathlab/rng.hpp"
