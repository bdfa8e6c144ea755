#pragma once

#include "ria/setcover/exact.hpp"
#include "ria/setcover/fractional.hpp"
#include "ria/setcover/generators.hpp"
#include "ria/setcover/instance.hpp"
#include "ria/setcover/rand_sc.hpp"
#include "ria/setcover/rounding.hpp"
#include "ria/setcover/tree.hpp"
