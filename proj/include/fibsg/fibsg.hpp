#pragma once

#include "fibsg/bigint.hpp"
#include "fibsg/error.hpp"
#include "fibsg/family.hpp"
#include "fibsg/fibonacci.hpp"
#include "fibsg/parallel.hpp"
#include "fibsg/report.hpp"
#include "fibsg/semigroup.hpp"
#include "fibsg/verify.hpp"
