#pragma once

#include "hfsc/bench.hpp"
#include "hfsc/construction.hpp"
#include "hfsc/generator.hpp"
#include "hfsc/io.hpp"
#include "hfsc/knapsack.hpp"
#include "hfsc/model.hpp"
#include "hfsc/solver.hpp"
#include "hfsc/svg.hpp"
