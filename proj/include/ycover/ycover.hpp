#pragma once

#include "constructor.hpp"
#include "diagram.hpp"
#include "diffgraph.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "posets.hpp"
#include "reduction.hpp"
