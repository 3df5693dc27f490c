#pragma once

#include "ramicalc/annulus.hpp"
#include "ramicalc/csv.hpp"
#include "ramicalc/group.hpp"
#include "ramicalc/harmonicity.hpp"
#include "ramicalc/json_io.hpp"
#include "ramicalc/lambda.hpp"
#include "ramicalc/logvalue.hpp"
#include "ramicalc/piecewise.hpp"
#include "ramicalc/radial.hpp"
#include "ramicalc/ramification.hpp"
#include "ramicalc/series.hpp"
#include "ramicalc/valuation.hpp"
