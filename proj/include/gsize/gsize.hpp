#pragma once

#include "core.hpp"
#include "errors.hpp"
#include "experiment.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "ind_estimators.hpp"
#include "node_estimators.hpp"
#include "rng.hpp"
#include "rw_correction.hpp"
#include "sample.hpp"
#include "sample_io.hpp"
#include "star_sampling.hpp"
