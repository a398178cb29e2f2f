#pragma once

#include "maxstp/connectivity.hpp"
#include "maxstp/element_set.hpp"
#include "maxstp/error.hpp"
#include "maxstp/graph.hpp"
#include "maxstp/graph_decomposition.hpp"
#include "maxstp/matroid.hpp"
#include "maxstp/matroid_decomposition.hpp"
#include "maxstp/matroid_packing.hpp"
#include "maxstp/matroid_union.hpp"
#include "maxstp/protocol.hpp"
#include "maxstp/tree_packing.hpp"
