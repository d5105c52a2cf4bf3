#pragma once

// Umbrella header for the railway magnetic-field energy harvesting toolkit.

#include "mfeh/common.hpp"
#include "mfeh/config.hpp"
#include "mfeh/harvester.hpp"
#include "mfeh/lab_data.hpp"
#include "mfeh/magnetics.hpp"
#include "mfeh/optimize.hpp"
#include "mfeh/report.hpp"
#include "mfeh/scenario.hpp"
#include "mfeh/traces.hpp"
