#pragma once

#include "algorithms/ba.hpp"
#include "algorithms/common.hpp"
#include "algorithms/dpso.hpp"
#include "algorithms/ga.hpp"
#include "algorithms/ompcdpso.hpp"
#include "core.hpp"
#include "metrics.hpp"
#include "operators.hpp"
#include "problems/allocation.hpp"
#include "problems/benchmarks.hpp"
#include "problems/binary_codec.hpp"
#include "problems/factory.hpp"
#include "rng.hpp"
