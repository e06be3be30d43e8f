#pragma once

#include "pedparts/bijections.hpp"
#include "pedparts/generating_functions.hpp"
#include "pedparts/identity_report.hpp"
#include "pedparts/partition.hpp"
#include "pedparts/series.hpp"
#include "pedparts/verifier.hpp"
