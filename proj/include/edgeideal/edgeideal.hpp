#pragma once

#include "errors.hpp"
#include "vertex_set.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "exponent.hpp"
#include "saturation.hpp"
#include "assoc.hpp"
#include "oracle.hpp"
#include "census.hpp"
