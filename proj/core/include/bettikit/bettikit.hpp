#pragma once

#include "bettikit/betti.hpp"
#include "bettikit/binomial.hpp"
#include "bettikit/complex.hpp"
#include "bettikit/connected_sum.hpp"
#include "bettikit/enumeration.hpp"
#include "bettikit/error.hpp"
#include "bettikit/generators.hpp"
#include "bettikit/graph.hpp"
#include "bettikit/hochster.hpp"
#include "bettikit/io.hpp"
#include "bettikit/limits.hpp"
#include "bettikit/relabeling.hpp"
#include "bettikit/vertex_set.hpp"
