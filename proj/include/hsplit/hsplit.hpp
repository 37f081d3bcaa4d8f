#pragma once

#include "hsplit/apps.hpp"
#include "hsplit/cover.hpp"
#include "hsplit/error.hpp"
#include "hsplit/flow.hpp"
#include "hsplit/hypergraph.hpp"
#include "hsplit/io.hpp"
#include "hsplit/oracles.hpp"
#include "hsplit/oriented.hpp"
#include "hsplit/splitoff.hpp"
#include "hsplit/vertex_set.hpp"
#include "hsplit/weight.hpp"
