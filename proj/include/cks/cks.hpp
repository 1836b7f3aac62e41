#pragma once

// Umbrella header: community-aware k-shell influence ranking toolkit.

#include "cks/baselines.hpp"
#include "cks/community.hpp"
#include "cks/coreness.hpp"
#include "cks/diffusion.hpp"
#include "cks/graph.hpp"
#include "cks/metrics.hpp"
#include "cks/parallel.hpp"
#include "cks/rng.hpp"
#include "cks/score.hpp"
