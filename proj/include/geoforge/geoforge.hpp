#pragma once

#include "geoforge/constants.hpp"
#include "geoforge/error.hpp"
#include "geoforge/fundamental_domain.hpp"
#include "geoforge/intersection.hpp"
#include "geoforge/moebius.hpp"
#include "geoforge/pants.hpp"
#include "geoforge/parallel.hpp"
#include "geoforge/real.hpp"
#include "geoforge/strand.hpp"
#include "geoforge/survey.hpp"
#include "geoforge/threshold.hpp"
#include "geoforge/word.hpp"
