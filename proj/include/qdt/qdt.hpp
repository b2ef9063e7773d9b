#pragma once

#include "qdt/core.hpp"
#include "qdt/uncertainty.hpp"
#include "qdt/lifting.hpp"
#include "qdt/likelihood.hpp"
#include "qdt/nonmonotonic.hpp"
#include "qdt/harness/report.hpp"
#include "qdt/harness/enumerate.hpp"
#include "qdt/harness/relation.hpp"
#include "qdt/harness/act_checks.hpp"
#include "qdt/harness/event_checks.hpp"
#include "qdt/harness/search.hpp"
#include "qdt/harness/sweeps.hpp"
