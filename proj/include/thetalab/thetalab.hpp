#pragma once

// Umbrella header.

#include "thetalab/coloring.hpp"
#include "thetalab/constructions.hpp"
#include "thetalab/error.hpp"
#include "thetalab/experiments.hpp"
#include "thetalab/ffield.hpp"
#include "thetalab/freeness.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/graph_io.hpp"
#include "thetalab/linalg.hpp"
#include "thetalab/ortho.hpp"
#include "thetalab/report.hpp"
#include "thetalab/theta.hpp"
