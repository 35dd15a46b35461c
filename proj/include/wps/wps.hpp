#pragma once

#include "wps/error.hpp"
#include "wps/hyperbolicity.hpp"
#include "wps/rational.hpp"
#include "wps/report.hpp"
#include "wps/search.hpp"
#include "wps/sections.hpp"
#include "wps/strata.hpp"
#include "wps/weights.hpp"
