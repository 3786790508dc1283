#pragma once

#include "patstat/bijections.hpp"
#include "patstat/catalog.hpp"
#include "patstat/error.hpp"
#include "patstat/permutation.hpp"
#include "patstat/polynomial.hpp"
#include "patstat/stats.hpp"
#include "patstat/verify.hpp"
