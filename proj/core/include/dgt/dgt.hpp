#pragma once

#include "dgt/common.hpp"
#include "dgt/community_structure.hpp"
#include "dgt/game_engine.hpp"
#include "dgt/gain_functions.hpp"
#include "dgt/initialization.hpp"
#include "dgt/io.hpp"
#include "dgt/metrics.hpp"
#include "dgt/pipeline.hpp"
#include "dgt/rng.hpp"
#include "dgt/snapshot_graph.hpp"
#include "dgt/synth.hpp"
