#pragma once

#include "matchgroup/catalog.hpp"
#include "matchgroup/error.hpp"
#include "matchgroup/group_core.hpp"
#include "matchgroup/group_table.hpp"
#include "matchgroup/io.hpp"
#include "matchgroup/lattice.hpp"
#include "matchgroup/matching.hpp"
#include "matchgroup/report.hpp"
#include "matchgroup/subset.hpp"
#include "matchgroup/subset_algebra.hpp"
#include "matchgroup/suite.hpp"
#include "matchgroup/theorem_lab.hpp"
