#pragma once

#include "firefight/error.hpp"
#include "firefight/evolution.hpp"
#include "firefight/fire_state.hpp"
#include "firefight/fitness.hpp"
#include "firefight/genome.hpp"
#include "firefight/genome_io.hpp"
#include "firefight/grid.hpp"
#include "firefight/oracle.hpp"
#include "firefight/parallel.hpp"
#include "firefight/rational.hpp"
#include "firefight/render.hpp"
#include "firefight/runlog_io.hpp"
#include "firefight/simulate.hpp"
#include "firefight/strategies.hpp"
