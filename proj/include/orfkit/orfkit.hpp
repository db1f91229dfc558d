#pragma once

#include "orfkit/analytics.hpp"
#include "orfkit/dataset.hpp"
#include "orfkit/errors.hpp"
#include "orfkit/features.hpp"
#include "orfkit/moments.hpp"
#include "orfkit/mse.hpp"
#include "orfkit/report.hpp"
#include "orfkit/rng.hpp"
#include "orfkit/sampling.hpp"
#include "orfkit/specfun.hpp"
