#pragma once

#include "graphcvx/convexity.hpp"
#include "graphcvx/extended_real.hpp"
#include "graphcvx/families.hpp"
#include "graphcvx/graph.hpp"
#include "graphcvx/graph_io.hpp"
#include "graphcvx/group_lattice.hpp"
#include "graphcvx/metric.hpp"
#include "graphcvx/sampling.hpp"
#include "graphcvx/search.hpp"
#include "graphcvx/subharmonic.hpp"
#include "graphcvx/theorems.hpp"
#include "graphcvx/vertex_function.hpp"
#include "graphcvx/vertex_set.hpp"
