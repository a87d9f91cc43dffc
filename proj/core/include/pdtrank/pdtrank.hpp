#pragma once

// Umbrella header.

#include "pdtrank/delta.hpp"
#include "pdtrank/designated.hpp"
#include "pdtrank/partition.hpp"
#include "pdtrank/ranks.hpp"
#include "pdtrank/series.hpp"
#include "pdtrank/table.hpp"
#include "pdtrank/verify.hpp"
